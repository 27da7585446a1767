"""Shared fixtures and random-instance generators for the test suite."""

from pathlib import Path

import numpy as np
import pytest

from polycenter import LineSection, Polytope, normalize_rows, parse_polytope, section

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def square():
    return parse_polytope((DATA / "square.poly").read_text())


@pytest.fixture(scope="session")
def simplex():
    return parse_polytope((DATA / "simplex.poly").read_text())


@pytest.fixture(scope="session")
def example1():
    return parse_polytope((DATA / "example1.poly").read_text())


@pytest.fixture(scope="session")
def example2():
    return parse_polytope((DATA / "example2.poly").read_text())


def random_polytope(rng, n, extra=3):
    """Bounded polytope with a known deep interior point.

    A box around a random anchor guarantees boundedness; extra random
    halfspaces pass at distance >= 0.4 from the anchor, so the anchor is
    strictly interior with slack >= 0.4 everywhere.  Returns
    ``(polytope, anchor)``.
    """
    anchor = rng.uniform(-1.0, 1.0, size=n)
    rows, rhs = [], []
    for k in range(n):
        e = np.zeros(n)
        e[k] = 1.0
        rows.append(e.copy())
        rhs.append(anchor[k] + rng.uniform(1.0, 2.5))
        rows.append(-e)
        rhs.append(-(anchor[k] - rng.uniform(1.0, 2.5)))
    for _ in range(extra):
        a = rng.normal(size=n)
        a /= np.linalg.norm(a)
        rows.append(a)
        rhs.append(float(a @ anchor) + rng.uniform(0.4, 2.0))
    poly = normalize_rows(Polytope(np.array(rows), np.array(rhs)))
    return poly, anchor


def random_unit(rng, n):
    u = rng.normal(size=n)
    return u / np.linalg.norm(u)


def random_interior_point(rng, poly, anchor, frac=0.6):
    """Point at most ``frac`` of the way from ``anchor`` to the boundary.

    Every slack at the result is >= (1 - frac) times its value at the
    anchor, keeping reciprocal sums well conditioned.
    """
    u = random_unit(rng, poly.n)
    sec = section(poly, anchor, u)
    t = rng.uniform(frac * sec.d_minus, frac * sec.d_plus)
    return anchor + t * u


def random_section(rng, max_side=4, with_parallel=True):
    """Synthetic line section with distances in +-(0.05, 3)."""
    npos = rng.integers(1, max_side + 1)
    nneg = rng.integers(1, max_side + 1)
    values = np.concatenate(
        [
            rng.uniform(0.05, 3.0, size=npos),
            -rng.uniform(0.05, 3.0, size=nneg),
        ]
    )
    if with_parallel and rng.random() < 0.3:
        values = np.append(values, np.inf)
    return LineSection.from_distances(rng.permutation(values))


# Reference iteration table for the 2-D fixture: start -> (sweep-1 point,
# final point).  A None final means the search stops after one sweep.
TABLE1 = {
    (9.0, 6.0): ((6.01, 5.55), None),
    (3.0, 0.25): ((3.31, 5.47), (6.02, 5.55)),
    (2.0, 7.5): ((3.46, 5.48), (6.02, 5.55)),
    (5.0, 1.0): ((3.91, 5.49), (6.02, 5.55)),
    (7.0, 3.0): ((5.07, 5.52), (6.03, 5.55)),
    (5.0, 7.0): ((4.86, 5.51), (6.03, 5.55)),
}
CENTER1 = (6.02, 5.55)

# Reference trace for the 4-D fixture: iterate coordinates and f-norm.
TABLE2 = (
    ((1.00, 2.00, 2.50, 1.30), 1.013),
    ((1.70, 2.68, 4.10, 2.11), 0.185),
    ((1.66, 2.82, 4.03, 2.05), 0.016),
    ((1.68, 2.83, 4.05, 2.03), 0.007),
)

TABLE_TOL = 0.02
