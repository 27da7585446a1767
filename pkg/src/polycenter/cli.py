"""Command-line front end.

Commands operate on ``.poly`` files (format documented in
:mod:`polycenter.model`).  Results go to stdout; diagnostics and errors go
to stderr.  Exit codes: 0 success, 1 parse or I/O error, 2 infeasible
input or non-interior start, 3 unbounded line or polytope, 4 iteration
budget exhausted.
"""

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .center import (
    bi_center,
    directional_sum,
    f_norm,
    harmonic_center,
    harmonic_hyperplane,
)
from .errors import (
    BracketInvalidError,
    DegenerateAtCenterError,
    DimensionUnsupportedError,
    InteriorSearchError,
    NotInteriorError,
    PolytopeFormatError,
    UnboundedDirectionError,
)
from .harmonic import harmonic_point_on_line
from .lines import axis_direction, unit_direction
from .model import find_interior_point, load_polytope
from .svg import emit_svg

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INFEASIBLE = 2
EXIT_UNBOUNDED = 3
EXIT_MAXITER = 4

_CHECK_DIRECTIONS = 100
_CHECK_SEED = 0


@dataclass
class RunConfig:
    """Resolved invocation: one command plus its inputs and knobs."""

    command: str
    input_path: str
    start: tuple | None = None
    stop_tol: float = 0.01
    inner_tol: float = 1e-10
    max_iter: int = 100
    fmt: str = "table"
    trace_path: str | None = None
    svg_path: str | None = None
    axis: int | None = None
    direction: tuple | None = None


class _Parser(argparse.ArgumentParser):
    # usage problems are parse errors (exit 1); argparse's default of 2 is
    # reserved for infeasible input
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _vector(text):
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated numbers, got {text!r}"
        ) from None


def build_parser():
    parser = _Parser(
        prog="polycenter",
        description="Harmonic centers, points, and hyperplanes of convex "
        "polytopes in halfspace form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_loop=True):
        p.add_argument("input", help="path to a .poly file")
        p.add_argument(
            "--start",
            type=_vector,
            default=None,
            metavar="X1,...,XN",
            help="interior start point (default: search for one)",
        )
        p.add_argument(
            "--inner-tol",
            type=float,
            default=1e-10,
            help="tolerance of the per-line root solver (default 1e-10)",
        )
        p.add_argument(
            "--format",
            dest="fmt",
            choices=("table", "csv", "json"),
            default="table",
            help="output format (default table)",
        )
        if with_loop:
            p.add_argument(
                "--tol",
                type=float,
                default=0.01,
                help="stopping tolerance of the outer loop (default 0.01)",
            )
            p.add_argument(
                "--max-iter",
                type=int,
                default=100,
                help="outer iteration cap (default 100)",
            )

    p_center = sub.add_parser("center", help="compute the harmonic center")
    common(p_center)
    p_center.add_argument("--trace", default=None, help="write iteration CSV here")
    p_center.add_argument(
        "--svg", default=None, help="write an SVG of the trajectory (n = 2 only)"
    )

    p_point = sub.add_parser(
        "point", help="harmonic point of one line through the start"
    )
    common(p_point, with_loop=False)
    group = p_point.add_mutually_exclusive_group(required=True)
    group.add_argument("--axis", type=int, help="1-based coordinate axis")
    group.add_argument(
        "--dir",
        dest="direction",
        type=_vector,
        metavar="V1,...,VN",
        help="line direction (normalized on ingestion)",
    )

    p_hyp = sub.add_parser(
        "hyperplane", help="harmonic hyperplane of the start point"
    )
    common(p_hyp, with_loop=False)

    p_cmp = sub.add_parser(
        "compare-bi", help="harmonic center vs bisection center from one start"
    )
    common(p_cmp)

    p_check = sub.add_parser(
        "check", help="test whether the start point is the harmonic center"
    )
    common(p_check)

    return parser


def _fmt_point(p):
    return "(" + ", ".join(f"{v:.2f}" for v in p) + ")"


def _point_csv(names, values):
    return ",".join(names) + "\n" + ",".join(repr(float(v)) for v in values) + "\n"


def _resolve_start(config, poly):
    if config.start is not None:
        p0 = np.asarray(config.start, dtype=float)
        if p0.shape != (poly.n,):
            raise PolytopeFormatError(
                f"start point has {p0.size} coordinates, polytope has n={poly.n}"
            )
        return p0
    p0 = find_interior_point(poly)
    print(
        "start (auto): " + ",".join(repr(float(v)) for v in p0),
        file=sys.stderr,
    )
    return p0


def _cmd_center(config, poly, out):
    p0 = _resolve_start(config, poly)
    point, trace = harmonic_center(
        poly,
        p0,
        stop_tol=config.stop_tol,
        max_iter=config.max_iter,
        inner_tol=config.inner_tol,
    )
    if config.trace_path:
        with open(config.trace_path, "w", encoding="utf-8") as fh:
            fh.write(trace.to_csv())
    if config.svg_path:
        doc = emit_svg([trace], poly)
        with open(config.svg_path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    final = trace.final
    if config.fmt == "table":
        out.write(f"center: {_fmt_point(point)}\n")
        out.write(f"fnorm: {final.fnorm:.3f}\n")
        out.write(f"iterations: {final.iteration}\n")
        out.write(f"converged: {'yes' if trace.converged else 'no'}\n")
    elif config.fmt == "csv":
        out.write(trace.to_csv())
    else:
        out.write(
            json.dumps(
                {
                    "center": [float(v) for v in point],
                    "fnorm": final.fnorm,
                    "iterations": final.iteration,
                    "converged": trace.converged,
                }
            )
            + "\n"
        )
    if not trace.converged:
        print(
            f"not converged after {final.iteration} iterations "
            f"(fnorm {final.fnorm:.6g} > {config.stop_tol:.6g})",
            file=sys.stderr,
        )
        return EXIT_MAXITER
    return EXIT_OK


def _cmd_point(config, poly, out):
    p0 = _resolve_start(config, poly)
    if config.axis is not None:
        u = axis_direction(config.axis, poly.n)
    else:
        d = np.asarray(config.direction, dtype=float)
        if d.shape != (poly.n,):
            raise PolytopeFormatError(
                f"direction has {d.size} components, polytope has n={poly.n}"
            )
        u = unit_direction(d)
    q = harmonic_point_on_line(poly, p0, u, tol=config.inner_tol)
    if config.fmt == "table":
        out.write(f"point: {_fmt_point(q)}\n")
    elif config.fmt == "csv":
        out.write(_point_csv([f"x{j + 1}" for j in range(poly.n)], q))
    else:
        out.write(json.dumps({"point": [float(v) for v in q]}) + "\n")
    return EXIT_OK


def _cmd_hyperplane(config, poly, out):
    p0 = _resolve_start(config, poly)
    hp = harmonic_hyperplane(poly, p0)
    if config.fmt == "table":
        out.write(f"normal: {_fmt_point(hp.normal)}\n")
        out.write(f"offset: {hp.offset:.2f}\n")
    elif config.fmt == "csv":
        names = [f"v{j + 1}" for j in range(poly.n)] + ["offset"]
        out.write(_point_csv(names, list(hp.normal) + [hp.offset]))
    else:
        out.write(
            json.dumps(
                {
                    "normal": [float(v) for v in hp.normal],
                    "offset": hp.offset,
                }
            )
            + "\n"
        )
    return EXIT_OK


def _cmd_compare_bi(config, poly, out):
    p0 = _resolve_start(config, poly)
    hc, htrace = harmonic_center(
        poly,
        p0,
        stop_tol=config.stop_tol,
        max_iter=config.max_iter,
        inner_tol=config.inner_tol,
    )
    bc, btrace = bi_center(
        poly, p0, stop_tol=config.stop_tol, max_iter=config.max_iter
    )
    gap = float(np.linalg.norm(hc - bc))
    if config.fmt == "table":
        out.write(f"harmonic center: {_fmt_point(hc)}\n")
        out.write(f"bisection center: {_fmt_point(bc)}\n")
        out.write(f"gap: {gap:.2f}\n")
    elif config.fmt == "csv":
        names = ["which"] + [f"x{j + 1}" for j in range(poly.n)]
        lines = [",".join(names)]
        lines.append("harmonic," + ",".join(repr(float(v)) for v in hc))
        lines.append("bisection," + ",".join(repr(float(v)) for v in bc))
        out.write("\n".join(lines) + "\n")
    else:
        out.write(
            json.dumps(
                {
                    "harmonic_center": [float(v) for v in hc],
                    "bisection_center": [float(v) for v in bc],
                    "gap": gap,
                }
            )
            + "\n"
        )
    if not (htrace.converged and btrace.converged):
        print("one or both searches hit the iteration cap", file=sys.stderr)
        return EXIT_MAXITER
    return EXIT_OK


def _cmd_check(config, poly, out):
    p0 = _resolve_start(config, poly)
    fn = f_norm(poly, p0)
    rng = np.random.default_rng(_CHECK_SEED)
    worst = 0.0
    for _ in range(_CHECK_DIRECTIONS):
        u = rng.normal(size=poly.n)
        u /= np.linalg.norm(u)
        worst = max(worst, abs(directional_sum(poly, p0, u)))
    ok = fn <= config.stop_tol and worst <= config.stop_tol
    if config.fmt == "json":
        out.write(
            json.dumps(
                {
                    "fnorm": fn,
                    "max_directional_sum": worst,
                    "directions": _CHECK_DIRECTIONS,
                    "pass": ok,
                }
            )
            + "\n"
        )
    else:
        out.write(f"fnorm: {fn:.6g}\n")
        out.write(
            f"max |directional sum| over {_CHECK_DIRECTIONS} random "
            f"directions: {worst:.6g}\n"
        )
        out.write(
            f"check: {'PASS' if ok else 'FAIL'} (tol {config.stop_tol:.6g})\n"
        )
    return EXIT_OK


_COMMANDS = {
    "center": _cmd_center,
    "point": _cmd_point,
    "hyperplane": _cmd_hyperplane,
    "compare-bi": _cmd_compare_bi,
    "check": _cmd_check,
}


def run(config, out=None):
    """Execute one command; returns the exit status."""
    out = out if out is not None else sys.stdout
    poly = load_polytope(config.input_path)
    return _COMMANDS[config.command](config, poly, out)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage problems itself; surface them as a
        # parse-error status instead of exiting the interpreter
        return EXIT_PARSE if exc.code else EXIT_OK
    config = RunConfig(
        command=args.command,
        input_path=args.input,
        start=args.start,
        stop_tol=getattr(args, "tol", 0.01),
        inner_tol=args.inner_tol,
        max_iter=getattr(args, "max_iter", 100),
        fmt=args.fmt,
        trace_path=getattr(args, "trace", None),
        svg_path=getattr(args, "svg", None),
        axis=getattr(args, "axis", None),
        direction=getattr(args, "direction", None),
    )
    if config.stop_tol <= 0 or config.inner_tol <= 0:
        print("error: tolerances must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return run(config)
    except (PolytopeFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotInteriorError, InteriorSearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (UnboundedDirectionError, BracketInvalidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNBOUNDED
    except (DimensionUnsupportedError, DegenerateAtCenterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
