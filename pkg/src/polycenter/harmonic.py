"""Harmonic point of a line: root of the reciprocal-distance sum.

For a line section with signed intersection distances ``d_i``, the
harmonic point sits at the offset ``h`` solving

    F(h) = sum_i 1 / (d_i - h) = 0,    d_minus < h < d_plus,

where the sum runs over the constraints the line intersects.  On the
feasible bracket ``F`` is strictly increasing (F'(h) = sum 1/(d_i - h)^2
> 0) and runs from -inf at ``d_minus`` to +inf at ``d_plus``, so the root
exists and is unique.  The primary solver is Newton's method with a
bisection safeguard; a pure-bisection solver is kept as an independent
cross-check.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BracketInvalidError
from .lines import axis_direction, point_at, section


@dataclass(frozen=True)
class HarmonicSolveResult:
    """Root-solve outcome.

    ``h`` is the offset along the line (in the same units as the section
    distances), ``residual`` the value of the reciprocal sum at ``h``, and
    ``method`` one of ``"newton"`` or ``"bisection"``.  ``converged`` is
    False only when the iteration budget ran out, in which case ``h`` is
    the best bracketed estimate.
    """

    h: float
    iterations: int
    residual: float
    method: str
    converged: bool


def _check_bracket(sec):
    d = sec.finite_distances
    if not (sec.d_minus < 0.0 < sec.d_plus):
        raise BracketInvalidError(
            f"invalid bracket ({sec.d_minus}, {sec.d_plus}): must straddle 0"
        )
    if not ((d > 0.0).any() and (d < 0.0).any()):
        raise BracketInvalidError(
            "bracket needs at least one positive and one negative distance"
        )
    return d


def solve_harmonic_offset(sec, tol=1e-10, max_iter=100):
    """Solve ``sum 1/(d_i - h) = 0`` on the feasible bracket.

    Safeguarded Newton iteration: starts at ``h = 0`` (always inside the
    bracket, since the base point is interior), keeps a shrinking
    sub-bracket using the sign of the sum, and replaces any Newton step
    that leaves the sub-bracket by its midpoint.  Terminates when
    ``|F(h)| <= tol`` or the sub-bracket is narrower than ``tol`` times
    the full bracket width.

    Parameters
    ----------
    sec : LineSection
        Section with a valid bracket ``d_minus < 0 < d_plus``.
    tol : float
        Tolerance on the reciprocal sum, with a relative bracket-width
        fallback for poles too steep to meet it in float64.
    max_iter : int
        Iteration cap; on exhaustion the result carries
        ``converged=False`` instead of raising.

    Returns
    -------
    HarmonicSolveResult
    """
    d = _check_bracket(sec)
    lo, hi = sec.d_minus, sec.d_plus
    width = hi - lo
    h = 0.0
    f = 0.0
    converged = False
    its = 0
    for its in range(1, max_iter + 1):
        r = d - h
        f = float(np.sum(1.0 / r))
        if abs(f) <= tol:
            converged = True
            break
        if f > 0.0:
            hi = h
        else:
            lo = h
        if hi - lo <= tol * width:
            converged = True
            break
        fp = float(np.sum(1.0 / (r * r)))
        step = h - f / fp
        if not np.isfinite(step) or step <= lo or step >= hi:
            step = 0.5 * (lo + hi)
        h = step
    if not converged:
        f = float(np.sum(1.0 / (d - h)))
    return HarmonicSolveResult(
        h=h, iterations=its, residual=f, method="newton", converged=converged
    )


def bisection_oracle(sec, tol=1e-10, max_iter=200):
    """Pure-bisection solve of the same root equation.

    Bisects ``(d_minus + eps, d_plus - eps)`` with ``eps = 1e-12`` of the
    bracket width, driven only by the sign of the reciprocal sum, so it
    converges unconditionally by monotonicity.  Deliberately shares no
    logic with :func:`solve_harmonic_offset`; it exists to cross-check it.
    """
    d = _check_bracket(sec)
    width = sec.width
    eps = 1e-12 * width
    lo, hi = sec.d_minus + eps, sec.d_plus - eps
    h = 0.5 * (lo + hi)
    f = 0.0
    converged = False
    its = 0
    for its in range(1, max_iter + 1):
        h = 0.5 * (lo + hi)
        f = float(np.sum(1.0 / (d - h)))
        if abs(f) <= tol or (hi - lo) <= 1e-15 * width:
            converged = True
            break
        if f > 0.0:
            hi = h
        else:
            lo = h
    return HarmonicSolveResult(
        h=h, iterations=its, residual=f, method="bisection", converged=converged
    )


def harmonic_point_on_line(polytope, p, u, tol=1e-10):
    """Harmonic point of the line through interior point ``p`` along unit ``u``.

    The result is strictly interior and is a property of the line, not of
    its orientation: ``u`` and ``-u`` give the same point.
    """
    sec = section(polytope, p, u)
    res = solve_harmonic_offset(sec, tol=tol)
    return point_at(p, u, res.h)


def harmonic_point_on_axis(polytope, p, k, tol=1e-10):
    """Harmonic point of the line through ``p`` parallel to axis ``k`` (1-based).

    Only coordinate ``k`` changes; the others are returned bit-identical.
    """
    u = axis_direction(k, polytope.n)
    sec = section(polytope, p, u)
    res = solve_harmonic_offset(sec, tol=tol)
    q = np.array(p, dtype=float)
    q[k - 1] += res.h
    return q
