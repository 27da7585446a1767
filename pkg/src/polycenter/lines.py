"""Signed intersection distances of a line with every constraint.

A line through a strictly interior point ``p`` with unit direction ``u``
meets constraint ``i`` at parameter ``d_i = S_i / (A_i . u)``: positive
ahead of ``p``, negative behind, no intersection when the line is parallel
to the constraint.  The open interval ``(d_minus, d_plus)`` between the
first contacts in each direction is the feasible bracket: the set of
parameters keeping the point strictly inside.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BracketInvalidError, NotInteriorError, UnboundedDirectionError
from .model import residuals

_UNIT_TOL = 1e-9


def axis_direction(k, n):
    """Unit vector along coordinate axis ``k`` (1-based) in ``n`` dimensions."""
    if not 1 <= k <= n:
        raise ValueError(f"axis index {k} out of range 1..{n}")
    u = np.zeros(n)
    u[k - 1] = 1.0
    return u


def unit_direction(v):
    """Normalize ``v`` to unit Euclidean norm."""
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        raise ValueError("direction must be nonzero")
    return v / norm


def point_at(p, u, t):
    """The point ``p + t * u``."""
    p = np.asarray(p, dtype=float)
    u = np.asarray(u, dtype=float)
    if p.shape != u.shape:
        raise ValueError(f"shape mismatch: point {p.shape}, direction {u.shape}")
    return p + t * u


@dataclass(frozen=True)
class LineSection:
    """Intersection distances of one line with all m constraints.

    ``distances[i]`` is the signed parameter at which the line meets
    constraint ``i``; entries are ``inf`` where there is no intersection
    (mask in ``parallel``).  ``d_minus < 0 < d_plus`` bound the feasible
    bracket; ``i_plus`` / ``i_minus`` are the blocking row indices
    (lowest index wins ties).  No finite distance lies strictly inside
    the bracket.
    """

    distances: np.ndarray
    parallel: np.ndarray
    d_plus: float
    d_minus: float
    i_plus: int
    i_minus: int

    @property
    def width(self):
        return self.d_plus - self.d_minus

    @property
    def finite_distances(self):
        """Distances of the constraints the line actually intersects."""
        return self.distances[~self.parallel]

    @classmethod
    def from_distances(cls, values):
        """Build a section from raw signed distances.

        Non-finite entries mean "no intersection".  Raises
        :class:`BracketInvalidError` when a distance is zero (the point
        would lie on that constraint) or when either side of the bracket
        is missing.
        """
        d = np.array(values, dtype=float).ravel()
        par = ~np.isfinite(d)
        d = np.where(par, np.inf, d)
        if np.any((d == 0.0) & ~par):
            raise BracketInvalidError("zero distance: point lies on a constraint")
        pos = ~par & (d > 0.0)
        neg = ~par & (d < 0.0)
        if not pos.any() or not neg.any():
            raise BracketInvalidError(
                "bracket needs at least one positive and one negative distance"
            )
        i_plus = int(np.argmin(np.where(pos, d, np.inf)))
        i_minus = int(np.argmax(np.where(neg, d, -np.inf)))
        d.setflags(write=False)
        par.setflags(write=False)
        return cls(
            distances=d,
            parallel=par,
            d_plus=float(d[i_plus]),
            d_minus=float(d[i_minus]),
            i_plus=i_plus,
            i_minus=i_minus,
        )


def section(polytope, p, u, parallel_eps=1e-12):
    """Section of the line through interior point ``p`` with direction ``u``.

    ``u`` must be a unit vector.  A constraint whose normal is orthogonal
    to ``u`` within ``parallel_eps`` is marked parallel (no intersection);
    near-parallel constraints beyond that threshold keep their huge finite
    distances, which downstream reciprocal sums handle naturally.

    Raises :class:`NotInteriorError` if some slack at ``p`` is <= 0, and
    :class:`UnboundedDirectionError` if the line never exits the polytope
    in one of the two directions (the polytope is not bounded along it).
    """
    u = np.asarray(u, dtype=float)
    if abs(np.linalg.norm(u) - 1.0) > _UNIT_TOL:
        raise ValueError("direction must be a unit vector")
    s = residuals(polytope, p)
    bad = np.flatnonzero(s <= 0.0)
    if bad.size:
        names = ", ".join(polytope.label(int(i)) for i in bad[:4])
        raise NotInteriorError(f"point is not strictly interior (rows: {names})")
    g = polytope.A @ u
    par = np.abs(g) <= parallel_eps
    d = np.where(par, np.inf, s / np.where(par, 1.0, g))
    pos = ~par & (d > 0.0)
    neg = ~par & (d < 0.0)
    if not pos.any():
        raise UnboundedDirectionError(
            "line has no forward intersection: polytope unbounded along it"
        )
    if not neg.any():
        raise UnboundedDirectionError(
            "line has no backward intersection: polytope unbounded along it"
        )
    i_plus = int(np.argmin(np.where(pos, d, np.inf)))
    i_minus = int(np.argmax(np.where(neg, d, -np.inf)))
    d.setflags(write=False)
    par.setflags(write=False)
    return LineSection(
        distances=d,
        parallel=par,
        d_plus=float(d[i_plus]),
        d_minus=float(d[i_minus]),
        i_plus=i_plus,
        i_minus=i_minus,
    )
