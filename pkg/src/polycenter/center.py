"""Harmonic center search, harmonic hyperplanes, and the bisection center.

The f-vector of an interior point ``p`` has components
``f_j = sum_i A_ij / S_i`` (slacks ``S_i`` at ``p``).  Its norm is the
convergence indicator: zero exactly at the harmonic center, growing
without bound at the boundary.  The center is found by cyclic coordinate
search: one sweep replaces each coordinate in turn with the harmonic
point of the axis line through the current iterate, and sweeps repeat
until the f-norm drops below the stopping tolerance.

For comparison, the bisection center is the point whose axis-parallel
chords it bisects; it is computed with the same sweep structure but
midpoint moves, and its own stopping rule (largest axis midpoint offset).
"""

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateAtCenterError, NotInteriorError
from .harmonic import solve_harmonic_offset
from .lines import _UNIT_TOL, axis_direction, section
from .model import residuals


def f_vector(polytope, p):
    """The vector ``f_j = sum_i A_ij / S_i`` at interior point ``p``.

    Vanishes exactly at the harmonic center.  Rows parallel to an axis
    contribute nothing to that component (their coefficient is 0), and the
    whole vector is invariant to per-row rescaling of ``(A_i, b_i)``.
    """
    s = residuals(polytope, p)
    if np.min(s) <= 0.0:
        raise NotInteriorError("f-vector requires a strictly interior point")
    return (polytope.A / s[:, None]).sum(axis=0)


def f_norm(polytope, p):
    """Euclidean norm of the f-vector: the closeness-to-center indicator."""
    return float(np.linalg.norm(f_vector(polytope, p)))


def directional_sum(polytope, p, u):
    """Sum of reciprocal intersection distances along unit direction ``u``.

    Evaluates ``sum_i (A_i . u) / S_i`` directly; by rearrangement this
    equals ``u . f_vector(p)``, so it is zero for every ``u`` at the
    harmonic center and for every in-hyperplane ``u`` at any point.
    """
    u = np.asarray(u, dtype=float)
    if abs(np.linalg.norm(u) - 1.0) > _UNIT_TOL:
        raise ValueError("direction must be a unit vector")
    s = residuals(polytope, p)
    if np.min(s) <= 0.0:
        raise NotInteriorError("directional sum requires a strictly interior point")
    return float(((polytope.A @ u) / s).sum())


@dataclass(frozen=True)
class Hyperplane:
    """Hyperplane ``normal . x = offset``."""

    normal: np.ndarray
    offset: float


def harmonic_hyperplane(polytope, p, degenerate_eps=1e-9):
    """The unique hyperplane through ``p`` in which ``p`` is harmonic.

    Its normal is the f-vector at ``p``: any line through ``p`` with a
    direction orthogonal to it has reciprocal-distance sum zero, i.e. ``p``
    is already the harmonic point of that line.  At the harmonic center the
    f-vector vanishes and no single such hyperplane exists, which raises
    :class:`DegenerateAtCenterError` (every direction is harmonic there).
    """
    v = f_vector(polytope, p)
    if np.linalg.norm(v) <= degenerate_eps:
        raise DegenerateAtCenterError(
            "point is the harmonic center: hyperplane undefined"
        )
    p = np.asarray(p, dtype=float)
    return Hyperplane(normal=v, offset=float(v @ p))


@dataclass(frozen=True)
class TraceRecord:
    """One row of a center-search trace: iterate and its f-norm."""

    iteration: int
    point: tuple
    fnorm: float


@dataclass(frozen=True)
class CenterTrace:
    """Full history of a center search, starting at iteration 0."""

    records: tuple
    converged: bool

    @property
    def final(self):
        return self.records[-1]

    @property
    def iterations(self):
        return self.final.iteration

    def to_csv(self):
        """Serialize as ``iter,x1,...,xn,fnorm`` with full-precision decimals."""
        n = len(self.records[0].point)
        header = "iter," + ",".join(f"x{j}" for j in range(1, n + 1)) + ",fnorm"
        lines = [header]
        for rec in self.records:
            cells = [str(rec.iteration)]
            cells += [repr(v) for v in rec.point]
            cells.append(repr(rec.fnorm))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def parse_trace_csv(text):
    """Parse trace CSV back into the tuple of :class:`TraceRecord`.

    Values written by :meth:`CenterTrace.to_csv` round-trip exactly.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty trace CSV") from None
    if header[0] != "iter" or header[-1] != "fnorm":
        raise ValueError(f"unexpected trace header: {header}")
    records = []
    for row in reader:
        if not row:
            continue
        records.append(
            TraceRecord(
                iteration=int(row[0]),
                point=tuple(float(v) for v in row[1:-1]),
                fnorm=float(row[-1]),
            )
        )
    return tuple(records)


def _record(polytope, iteration, p):
    return TraceRecord(
        iteration=iteration,
        point=tuple(float(v) for v in p),
        fnorm=f_norm(polytope, p),
    )


def cs_step(polytope, p, tol=1e-10):
    """One coordinate-search sweep: n sequential axis updates.

    For k = 1..n, moves coordinate k of the current point to the harmonic
    point of the axis-k line through it, re-evaluating slacks after every
    stage.  Returns the point after stage n.
    """
    q = np.array(p, dtype=float)
    for k in range(1, polytope.n + 1):
        sec = section(polytope, q, axis_direction(k, polytope.n))
        res = solve_harmonic_offset(sec, tol=tol)
        q[k - 1] += res.h
    return q


def harmonic_center(polytope, p0, stop_tol=0.01, max_iter=100, inner_tol=1e-10):
    """Run coordinate search from interior point ``p0`` to the harmonic center.

    Sweeps repeat while the f-norm of the current iterate exceeds
    ``stop_tol``; the trace records the start as iteration 0 and one row
    per completed sweep.  On ``max_iter`` exhaustion the trace carries
    ``converged=False`` and the best iterate is still returned.

    Returns ``(center, trace)``.
    """
    if stop_tol <= 0.0:
        raise ValueError("stop_tol must be positive")
    p = np.asarray(p0, dtype=float)
    records = [_record(polytope, 0, p)]
    it = 0
    while records[-1].fnorm > stop_tol and it < max_iter:
        p = cs_step(polytope, p, tol=inner_tol)
        it += 1
        records.append(_record(polytope, it, p))
    trace = CenterTrace(
        records=tuple(records), converged=records[-1].fnorm <= stop_tol
    )
    return p, trace


def _axis_midpoint_offset(polytope, p, k):
    sec = section(polytope, p, axis_direction(k, polytope.n))
    return 0.5 * (sec.d_plus + sec.d_minus)


def bi_point_on_axis(polytope, p, k):
    """Midpoint of the nearest contacts of the axis-k line through ``p``.

    Coordinate k moves by ``(d_plus + d_minus) / 2``; the others are
    unchanged.
    """
    q = np.array(p, dtype=float)
    q[k - 1] += _axis_midpoint_offset(polytope, q, k)
    return q


def _max_axis_offset(polytope, p):
    return max(
        abs(_axis_midpoint_offset(polytope, p, k))
        for k in range(1, polytope.n + 1)
    )


def bi_center(polytope, p0, stop_tol=0.01, max_iter=100):
    """Fixed point whose axis-parallel chords are all bisected.

    Same sweep structure as :func:`harmonic_center` but each stage moves to
    the chord midpoint, and the stopping rule is the largest axis midpoint
    offset at the iterate (the f-norm measures harmonic centrality, which
    this point does not optimize; it is still recorded in the trace for
    comparison).

    Returns ``(point, trace)``.
    """
    if stop_tol <= 0.0:
        raise ValueError("stop_tol must be positive")
    p = np.asarray(p0, dtype=float)
    records = [_record(polytope, 0, p)]
    it = 0
    converged = _max_axis_offset(polytope, p) <= stop_tol
    while not converged and it < max_iter:
        q = np.array(p)
        for k in range(1, polytope.n + 1):
            q = bi_point_on_axis(polytope, q, k)
        p = q
        it += 1
        records.append(_record(polytope, it, p))
        converged = _max_axis_offset(polytope, p) <= stop_tol
    return p, CenterTrace(records=tuple(records), converged=converged)
