"""Halfspace polytopes: construction, file parsing, residuals, classification.

A polytope is the solution set of ``A @ x <= b`` with ``A`` of shape
``(m, n)``, ``m > n``.  Rows are unit-normalized on ingestion so that the
slack of a constraint at a point equals the Euclidean distance from the
point to the constraint's boundary hyperplane.

File format (``.poly``, UTF-8 text)::

    # comment lines start with '#'; blank lines are ignored
    dims <m> <n>
    <A_i1> <A_i2> ... <A_in> <b_i> [label]     (exactly m such rows)

Every bound, including nonnegativity, must appear as an explicit row
(e.g. ``-1 0 0 x_nonneg`` for ``x >= 0``).  Numbers use standard decimal
or scientific notation; parsing is locale-independent.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InteriorSearchError, PolytopeFormatError

_ZERO_ROW_TOL = 1e-12


@dataclass(frozen=True)
class Polytope:
    """Closed convex polytope ``{x : A @ x <= b}``.

    ``A`` and ``b`` are stored as read-only float arrays; ``labels``, when
    given, names each constraint row.  Construction requires more rows than
    columns (``m > n``) and rejects zero rows.  It does not normalize rows
    (see :func:`normalize_rows`) and does not verify boundedness.
    """

    A: np.ndarray
    b: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        A = np.array(self.A, dtype=float)
        b = np.array(self.b, dtype=float).ravel()
        if A.ndim != 2:
            raise PolytopeFormatError("coefficient matrix must be two-dimensional")
        m, n = A.shape
        if n < 1:
            raise PolytopeFormatError("dimension count must be at least 1")
        if b.shape != (m,):
            raise PolytopeFormatError(
                f"right-hand side has {b.shape[0]} entries, expected {m}"
            )
        if m <= n:
            raise PolytopeFormatError(
                f"need more constraints than dimensions, got m={m} <= n={n}"
            )
        norms = np.linalg.norm(A, axis=1)
        zero = np.flatnonzero(norms <= _ZERO_ROW_TOL)
        if zero.size:
            raise PolytopeFormatError(f"zero coefficient row at index {zero[0]}")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != m:
                raise PolytopeFormatError(
                    f"{len(labels)} labels for {m} constraints"
                )
            object.__setattr__(self, "labels", labels)
        A.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def m(self):
        """Number of constraints."""
        return self.A.shape[0]

    @property
    def n(self):
        """Number of variables."""
        return self.A.shape[1]

    def label(self, i):
        """Display name of constraint ``i`` (0-based row index)."""
        if self.labels is not None:
            return self.labels[i]
        return f"c{i + 1}"

    def __repr__(self):
        return f"Polytope(m={self.m}, n={self.n})"


class Region(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class PointClass:
    """Classification of a point against a polytope.

    ``indices`` holds the 0-based rows within ``boundary_eps`` of contact
    (for BOUNDARY) or strictly violated (for EXTERIOR); it is empty for
    INTERIOR.
    """

    region: Region
    indices: tuple = ()

    @property
    def is_interior(self):
        return self.region is Region.INTERIOR


def normalize_rows(polytope):
    """Return a copy with every row of ``A`` scaled to unit Euclidean norm.

    The right-hand side entry is divided by the same norm, so the feasible
    set is unchanged.  Already-normalized polytopes come back unchanged up
    to floating-point rounding.
    """
    norms = np.linalg.norm(polytope.A, axis=1)
    return Polytope(
        polytope.A / norms[:, None], polytope.b / norms, polytope.labels
    )


def parse_polytope(text):
    """Parse ``.poly`` file content into a row-normalized :class:`Polytope`.

    Raises :class:`PolytopeFormatError` (with the offending line number) on
    syntax errors, zero rows, ``m <= n``, or row/dimension mismatches.
    """
    dims = None
    rows, rhs, labels = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if dims is None:
            if tokens[0] != "dims" or len(tokens) != 3:
                raise PolytopeFormatError(
                    "expected header 'dims <m> <n>'", line=lineno
                )
            try:
                m, n = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise PolytopeFormatError(
                    "dims header takes two integers", line=lineno
                ) from None
            if m < 1 or n < 1:
                raise PolytopeFormatError("dims must be positive", line=lineno)
            if m <= n:
                raise PolytopeFormatError(
                    f"need more constraints than dimensions, got m={m} <= n={n}",
                    line=lineno,
                )
            dims = (m, n)
            continue
        m, n = dims
        if len(rows) == m:
            raise PolytopeFormatError(
                f"extra data after {m} constraint rows", line=lineno
            )
        label = None
        if len(tokens) == n + 2:
            try:
                float(tokens[-1])
            except ValueError:
                label = tokens[-1]
                tokens = tokens[:-1]
            else:
                raise PolytopeFormatError(
                    f"row has {n + 2} numbers, expected {n} coefficients "
                    "and one right-hand side",
                    line=lineno,
                )
        if len(tokens) != n + 1:
            raise PolytopeFormatError(
                f"row has {len(tokens)} fields, expected {n + 1}", line=lineno
            )
        try:
            values = [float(t) for t in tokens]
        except ValueError as exc:
            raise PolytopeFormatError(str(exc), line=lineno) from None
        row = np.array(values[:n])
        if np.linalg.norm(row) <= _ZERO_ROW_TOL:
            raise PolytopeFormatError("zero coefficient row", line=lineno)
        rows.append(row)
        rhs.append(values[n])
        labels.append(label)
    if dims is None:
        raise PolytopeFormatError("missing 'dims <m> <n>' header")
    if len(rows) != dims[0]:
        raise PolytopeFormatError(
            f"expected {dims[0]} constraint rows, found {len(rows)}"
        )
    named = tuple(
        lab if lab is not None else f"c{i + 1}" for i, lab in enumerate(labels)
    )
    return normalize_rows(Polytope(np.array(rows), np.array(rhs), named))


def load_polytope(path):
    """Read and parse a ``.poly`` file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polytope(fh.read())


def residuals(polytope, p):
    """Per-constraint slack ``S_i = b_i - A_i . p`` at point ``p``.

    Positive entries mean the point is strictly on the feasible side of the
    constraint; with unit-normalized rows each entry is the Euclidean
    distance to the constraint boundary.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (polytope.n,):
        raise ValueError(
            f"point has shape {p.shape}, expected ({polytope.n},)"
        )
    return polytope.b - polytope.A @ p


def classify_point(polytope, p, boundary_eps=1e-9):
    """Classify ``p`` as interior, boundary, or exterior.

    INTERIOR requires every slack above ``boundary_eps``; EXTERIOR means a
    slack below ``-boundary_eps`` (violated rows reported); everything else
    is BOUNDARY with the near-contact rows reported.
    """
    if boundary_eps < 0:
        raise ValueError("boundary_eps must be nonnegative")
    s = residuals(polytope, p)
    violated = np.flatnonzero(s < -boundary_eps)
    if violated.size:
        return PointClass(Region.EXTERIOR, tuple(int(i) for i in violated))
    if np.all(s > boundary_eps):
        return PointClass(Region.INTERIOR)
    touching = np.flatnonzero(np.abs(s) <= boundary_eps)
    return PointClass(Region.BOUNDARY, tuple(int(i) for i in touching))


def find_interior_point(polytope, max_iter=1000):
    """Search for a strictly interior point by relaxation projection.

    Starting from the origin, repeatedly projects onto the worst (smallest
    slack) constraint, aiming for a positive target slack that shrinks when
    progress stalls.  Returns the first strictly interior point reached,
    which then satisfies every slack >= 1% of the best worst-slack seen
    during the run.

    This is a convenience for callers without a known interior point; a
    user-supplied start is preferred.  Raises :class:`InteriorSearchError`
    after ``max_iter`` projections, which signals an empty or degenerate
    interior (or an unreasonably small budget).
    """
    A, b = polytope.A, polytope.b
    sq = np.einsum("ij,ij->i", A, A)
    x = np.zeros(polytope.n)
    best = -np.inf
    target = 1.0
    stall_limit = max(20, 2 * polytope.m)
    stalled = 0
    for _ in range(max_iter):
        s = b - A @ x
        worst = int(np.argmin(s))
        smin = float(s[worst])
        if smin > 0.0:
            # margin = 0.01 * best worst-slack over the run; the first
            # interior point always clears it since best <= smin here.
            return x
        if smin > best:
            best = smin
            stalled = 0
        else:
            stalled += 1
            if stalled >= stall_limit:
                target *= 0.5
                stalled = 0
        x = x - (target - smin) * A[worst] / sq[worst]
    raise InteriorSearchError(
        f"no strictly interior point found in {max_iter} projection steps"
    )
