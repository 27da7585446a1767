"""Polytope construction, parsing, residuals, classification, interior search."""

import math

import numpy as np
import pytest

from conftest import random_polytope
from polycenter import (
    InteriorSearchError,
    Polytope,
    PolytopeFormatError,
    Region,
    classify_point,
    find_interior_point,
    normalize_rows,
    parse_polytope,
    residuals,
)

SQUARE_TEXT = """\
# unit square
dims 4 2
-1 0 0
0 -1 0
1 0 1
0 1 1
"""

SLANTED_TEXT = """\
dims 7 2
1.5 -1 8
0.2 1 8.4
-5 -1 -10
-4 1 1
0.5 -1 2
-1 0 0 x_nonneg
0 -1 0 y_nonneg
"""


class TestParse:
    def test_unit_square(self):
        poly = parse_polytope(SQUARE_TEXT)
        assert (poly.m, poly.n) == (4, 2)
        norms = np.linalg.norm(poly.A, axis=1)
        assert np.max(np.abs(norms - 1.0)) <= 1e-12

    def test_seven_row_fixture(self):
        poly = parse_polytope(SLANTED_TEXT)
        assert (poly.m, poly.n) == (7, 2)
        assert poly.labels[5] == "x_nonneg"
        assert poly.labels[0] == "c1"

    def test_zero_row_rejected(self):
        text = "dims 3 2\n0 0 5\n1 0 1\n0 1 1\n"
        with pytest.raises(PolytopeFormatError, match="line 2.*zero"):
            parse_polytope(text)

    def test_m_not_greater_than_n(self):
        with pytest.raises(PolytopeFormatError, match="m=2 <= n=2"):
            parse_polytope("dims 2 2\n1 0 1\n0 1 1\n")

    def test_bad_header(self):
        with pytest.raises(PolytopeFormatError, match="line 1"):
            parse_polytope("size 4 2\n")

    def test_wrong_field_count(self):
        with pytest.raises(PolytopeFormatError, match="line 2.*fields"):
            parse_polytope("dims 3 2\n1 0\n0 1 1\n-1 -1 0\n")

    def test_numeric_trailing_token_rejected(self):
        with pytest.raises(PolytopeFormatError, match="line 2"):
            parse_polytope("dims 3 2\n1 0 1 7\n0 1 1\n-1 -1 0\n")

    def test_missing_rows(self):
        with pytest.raises(PolytopeFormatError, match="expected 4"):
            parse_polytope("dims 4 2\n1 0 1\n0 1 1\n-1 0 0\n")

    def test_extra_rows(self):
        text = SQUARE_TEXT + "1 1 9\n"
        with pytest.raises(PolytopeFormatError, match="extra data"):
            parse_polytope(text)

    def test_scientific_notation_and_comments(self):
        text = "# c\n\ndims 3 2\n1e0 0 1.0e0\n# mid comment\n0 1E0 1\n-1 -1 0\n"
        poly = parse_polytope(text)
        assert poly.m == 3

    def test_rows_are_read_only(self):
        poly = parse_polytope(SQUARE_TEXT)
        with pytest.raises(ValueError):
            poly.A[0, 0] = 5.0


class TestPolytopeInvariants:
    def test_m_le_n_rejected_at_construction(self):
        with pytest.raises(PolytopeFormatError):
            Polytope(np.array([[1.0, 0.0]]), np.array([1.0]))

    def test_zero_row_rejected_at_construction(self):
        A = np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1.0]])
        with pytest.raises(PolytopeFormatError):
            Polytope(A, np.array([1.0, 1.0, 1.0]))

    def test_rhs_length_mismatch(self):
        A = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]])
        with pytest.raises(PolytopeFormatError):
            Polytope(A, np.array([1.0, 1.0]))


class TestNormalizeRows:
    def test_three_four_five(self):
        poly = Polytope(
            np.array([[3.0, 4.0], [1.0, 0.0], [0.0, 1.0]]),
            np.array([10.0, 1.0, 1.0]),
        )
        out = normalize_rows(poly)
        assert np.allclose(out.A[0], [0.6, 0.8], atol=1e-15)
        assert out.b[0] == pytest.approx(2.0, abs=1e-15)

    def test_unit_row_unchanged(self):
        poly = Polytope(
            np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]]),
            np.array([1.0, 1.0, 0.0]),
        )
        out = normalize_rows(poly)
        assert np.array_equal(out.A[0], poly.A[0])
        assert out.b[0] == poly.b[0]

    def test_slanted_row(self):
        # independent recomputation: divide by the row norm sqrt(1.5^2 + 1)
        scale = math.sqrt(3.25)
        poly = parse_polytope(SLANTED_TEXT)
        assert poly.A[0, 0] == pytest.approx(1.5 / scale, abs=1e-12)
        assert poly.A[0, 1] == pytest.approx(-1.0 / scale, abs=1e-12)
        assert poly.b[0] == pytest.approx(8.0 / scale, abs=1e-12)
        assert poly.A[0, 0] == pytest.approx(0.83205, abs=5e-6)
        assert poly.A[0, 1] == pytest.approx(-0.55470, abs=5e-6)
        assert poly.b[0] == pytest.approx(4.43760, abs=5e-6)

    def test_idempotent_bitwise(self):
        rng = np.random.default_rng(7)
        poly, _ = random_polytope(rng, 3)
        once = normalize_rows(poly)
        twice = normalize_rows(once)
        assert np.max(np.abs(twice.A - once.A)) <= 1e-15
        assert np.max(np.abs(twice.b - once.b)) <= 1e-15

    def test_feasible_set_preserved(self):
        rng = np.random.default_rng(11)
        raw = Polytope(
            np.array([[3.0, 4.0], [0.0, -2.0], [-5.0, 1.0], [1.0, 1.0]]),
            np.array([10.0, 3.0, 2.0, 1.5]),
        )
        normed = normalize_rows(raw)
        pts = rng.uniform(-4, 4, size=(1000, 2))
        for p in pts:
            s_raw = residuals(raw, p)
            s_new = residuals(normed, p)
            sign_raw = np.sign(np.where(np.abs(s_raw) <= 1e-9, 0.0, s_raw))
            sign_new = np.sign(np.where(np.abs(s_new) <= 1e-9, 0.0, s_new))
            assert np.array_equal(sign_raw, sign_new)


class TestResiduals:
    def test_square_center(self, square):
        s = residuals(square, (0.5, 0.5))
        assert np.allclose(s, 0.5, atol=1e-15)

    def test_square_boundary(self, square):
        s = residuals(square, (1.0, 0.5))
        assert np.allclose(s, [1.0, 0.5, 0.0, 0.5], atol=1e-15)

    def test_fixture_start_strictly_interior(self, example2):
        s = residuals(example2, (1.0, 2.0, 2.5, 1.3))
        assert np.min(s) > 0.0

    def test_affine_in_the_point(self):
        rng = np.random.default_rng(3)
        poly, anchor = random_polytope(rng, 4)
        for _ in range(200):
            u = rng.normal(size=4)
            t = rng.uniform(-2, 2)
            lhs = residuals(poly, anchor + t * u)
            rhs = residuals(poly, anchor) - t * (poly.A @ u)
            assert np.max(np.abs(lhs - rhs)) <= 1e-12

    def test_dimension_mismatch(self, square):
        with pytest.raises(ValueError, match="shape"):
            residuals(square, (0.5, 0.5, 0.5))


class TestClassifyPoint:
    def test_interior(self, square):
        pc = classify_point(square, (0.5, 0.5), 1e-9)
        assert pc.region is Region.INTERIOR
        assert pc.is_interior
        assert pc.indices == ()

    def test_boundary(self, square):
        pc = classify_point(square, (1.0, 0.5), 1e-9)
        assert pc.region is Region.BOUNDARY
        assert pc.indices == (2,)

    def test_exterior(self, square):
        pc = classify_point(square, (2.0, 0.5), 1e-9)
        assert pc.region is Region.EXTERIOR
        assert pc.indices == (2,)

    def test_negative_eps_rejected(self, square):
        with pytest.raises(ValueError):
            classify_point(square, (0.5, 0.5), -1.0)


class TestFindInteriorPoint:
    def test_square(self, square):
        p = find_interior_point(square)
        assert np.min(residuals(square, p)) > 0.0

    def test_slanted_fixture(self, example1):
        p = find_interior_point(example1)
        assert np.min(residuals(example1, p)) > 0.0

    def test_four_dim_fixture(self, example2):
        p = find_interior_point(example2)
        assert np.min(residuals(example2, p)) > 0.0

    def test_empty_interior(self):
        # x <= 0 and x >= 1 cannot both hold; y rows pad m above n
        A = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
        b = np.array([0.0, -1.0, 5.0, 5.0])
        with pytest.raises(InteriorSearchError):
            find_interior_point(Polytope(A, b), max_iter=400)

    def test_random_polytopes(self):
        rng = np.random.default_rng(23)
        for n in (2, 3, 4, 5):
            poly, _ = random_polytope(rng, n)
            p = find_interior_point(poly)
            assert np.min(residuals(poly, p)) > 0.0
