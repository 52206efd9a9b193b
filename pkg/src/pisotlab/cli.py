"""Command-line front end.

Every subcommand prints one JSON report (or CSV for ``spectrum``/``gaps`` with
``--format csv``). Exit codes: 0 success, 1 computational error, 2 usage
error, 3 inconclusive (neighbor-graph budget exhausted).
"""
from __future__ import annotations

import argparse
import io
import json
import sys
import time
from contextlib import redirect_stderr
from fractions import Fraction

from . import __version__
from .algebraic import AlgebraicReal
from .classify import classify_number, density_verdict, is_algebraic_integer
from .errors import PisotLabError
from .ifs import (
    DEFAULT_BUDGET,
    build_neighbor_graph,
    completion_depth,
    ifs_from_q_m,
    overlap_multiplicity,
    wsc_constant,
)
from .spectrum import DigitSet, enumerate_spectrum, gap_stats, min_nonzero_value, power_norms, spectrum_csv

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
COMMANDS = ("classify", "density", "spectrum", "gaps", "minval", "powers", "ftc", "completion", "overlap")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    g = shared.add_argument_group("number")
    g.add_argument("--q-poly", "--poly", dest="q_poly", help="defining polynomial in x, e.g. 'x^2-x-1'")
    g.add_argument("--root-in", dest="root_in", help="isolating interval lo,hi with exact rational ends")
    g.add_argument("--q-rational", dest="q_rational", type=_fraction, help="rational q such as 3/2")
    o = shared.add_argument_group("options")
    o.add_argument("--m", type=_positive_int, default=1, help="digit bound m (default 1)")
    o.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET, help="neighbor-graph node budget")
    o.add_argument("--horizon", type=_positive_int, help="word length n / number of powers N")
    o.add_argument("--bound", type=_fraction, help="spectrum bound B")
    o.add_argument("--digits", help="comma separated digit set (default 0..m)")
    o.add_argument("--lambda", dest="lam", type=_fraction, default=Fraction(1), help="multiplier for powers")
    o.add_argument("--backend", choices=("mitm", "exhaustive"), default="mitm")
    o.add_argument("--sequence", action="store_true", help="minval: report every length 1..horizon")
    o.add_argument("--graph-out", help="ftc: also write the graph as JSON to this path")
    o.add_argument("--format", choices=("json", "csv"), default="json")
    o.add_argument("--precision", type=_positive_int, help="significant digits of displayed floats")

    parser = argparse.ArgumentParser(prog="pisotlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"pisotlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "classify": "Pisot/Salem/Perron classification",
        "density": "is Y_m(q) dense in R",
        "spectrum": "points of the spectrum up to --bound",
        "gaps": "gap statistics of the spectrum up to --bound",
        "minval": "minimal nonzero |sum eps_i q^i| over words of length --horizon",
        "powers": "distances ||lambda q^n|| to the integers",
        "ftc": "neighbor graph, finite type test and WSC constant",
        "completion": "completion depth of the neighbor graph",
        "overlap": "pigeonhole overlap multiplicity at depth --horizon",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[shared], help=helps[name])
    return parser


class _Reporter:
    def __init__(self, precision: int | None):
        self.precision = precision

    def fl(self, x) -> float:
        x = float(x)
        if self.precision is None:
            return x
        return float(f"{x:.{self.precision}g}")

    def element(self, e) -> dict:
        return {"exact": e.to_string(), "float": self.fl(e)}


def _number(args, parser) -> AlgebraicReal:
    if args.q_rational is not None:
        if args.q_poly or args.root_in:
            parser.error("--q-rational cannot be combined with --q-poly/--root-in")
        return AlgebraicReal.from_rational(args.q_rational)
    if not args.q_poly:
        parser.error("one of --q-poly (with --root-in) or --q-rational is required")
    if not args.root_in:
        parser.error("--root-in lo,hi is required with --q-poly")
    try:
        lo, hi = (Fraction(s.strip()) for s in args.root_in.split(","))
    except ValueError:
        parser.error(f"argument --root-in: expected lo,hi with exact rationals, got {args.root_in!r}")
    return AlgebraicReal(args.q_poly, (lo, hi))


def _digits(args) -> DigitSet:
    return DigitSet.parse(args.digits) if args.digits else DigitSet.nonnegative(args.m)


def _execute(args, parser, rep: _Reporter) -> tuple[dict, str | None, int]:
    """Returns (results, csv_text_or_None, exit_code)."""
    cmd = args.command
    if args.format == "csv" and cmd not in ("spectrum", "gaps"):
        parser.error(f"argument --format: csv is only available for spectrum and gaps, not {cmd}")
    q = _number(args, parser)
    if cmd == "classify":
        c = classify_number(q)
        return {
            "class": c.tag.value,
            "algebraic_integer": is_algebraic_integer(q.poly),
            "minimal_polynomial": str(q.poly),
            "counts": {"inside": c.counts.inside, "on": c.counts.on, "outside": c.counts.outside},
        }, None, EXIT_OK
    if cmd == "density":
        v = density_verdict(q, args.m)
        return {"verdict": "Dense" if v.dense else "NotDense", "reason": v.reason}, None, EXIT_OK
    if cmd in ("spectrum", "gaps"):
        if args.bound is None:
            parser.error(f"argument --bound is required for {cmd}")
        s = enumerate_spectrum(q, _digits(args), args.bound)
        if args.format == "csv":
            return {}, spectrum_csv(s), EXIT_OK
        if cmd == "spectrum":
            pts = []
            for i, p in enumerate(s.points):
                gap = s.points[i + 1] - p if i + 1 < len(s.points) else None
                pts.append({
                    "index": i,
                    "value_exact": p.to_string(),
                    "value_float": rep.fl(p),
                    "gap_to_next": None if gap is None else rep.element(gap),
                })
            return {"count": len(pts), "max_degree": s.max_degree, "points": pts}, None, EXIT_OK
        st = gap_stats(s)
        return {
            "count": len(st.gaps),
            "gaps": [rep.element(x) for x in st.gaps],
            "min_gap": rep.element(st.min_gap),
            "max_gap": rep.element(st.max_gap),
            "note": "finite-horizon extremes of consecutive gaps, not the limits",
        }, None, EXIT_OK
    if cmd == "minval":
        n = args.horizon or 10
        lengths = range(1, n + 1) if args.sequence else [n]
        rows = []
        for k in lengths:
            r = min_nonzero_value(q, args.m, k, backend=args.backend)
            rows.append({"n": k, "value_exact": r.value.to_string(), "value_float": rep.fl(r.approx),
                         "witness": list(r.witness)})
        res = {"backend": args.backend}
        if args.sequence:
            res["sequence"] = rows
        else:
            res.update(rows[0])
        return res, None, EXIT_OK
    if cmd == "powers":
        rows = power_norms(args.lam, q, args.horizon or 20)
        return {"norms": [{
            "n": r.n,
            "nearest_integer": r.nearest,
            "norm_exact": r.norm.to_string(),
            "norm_float": rep.fl(r.approx),
            "error_bound": float(r.error),
            "partial_sum": rep.fl(r.partial_sum),
        } for r in rows]}, None, EXIT_OK
    f = ifs_from_q_m(q, args.m)
    if cmd == "overlap":
        n = args.horizon or 6
        return {"n": n, "multiplicity": overlap_multiplicity(f, n)}, None, EXIT_OK
    g = build_neighbor_graph(f, args.budget)
    res = {"complete": g.complete, "node_count": len(g), "bfs_depth": g.depth}
    code = EXIT_OK if g.complete else EXIT_INCONCLUSIVE
    if cmd == "ftc":
        if args.graph_out:
            with open(args.graph_out, "w") as fh:
                json.dump(g.to_dict(), fh, indent=2)
        if g.complete:
            c = wsc_constant(g)
            res.update({
                "finite_type": True,
                "gamma": [v.to_string() for v in g.nodes],
                "gamma_float": [rep.fl(v) for v in g.nodes],
                "wsc_c": c.to_string(),
                "wsc_c_float": rep.fl(c),
                "completion_k": completion_depth(g),
            })
        else:
            res["finite_type"] = None
    else:
        res["completion_k"] = completion_depth(g) if g.complete else None
    return res, None, code


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one command; returns the exit code and the text for standard output."""
    parser = build_parser()
    err = io.StringIO()
    try:
        with redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else EXIT_USAGE
        return code, err.getvalue()
    rep = _Reporter(args.precision)
    start = time.perf_counter()
    try:
        with redirect_stderr(err):
            results, csv_text, code = _execute(args, parser, rep)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else EXIT_USAGE), err.getvalue()
    except PisotLabError as e:
        return EXIT_ERROR, f"error: {type(e).__name__}: {e}\n"
    if csv_text is not None:
        return code, csv_text
    q_echo = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in vars(args).items() if k != "command"}
    report = {
        "command": args.command,
        "inputs": q_echo,
        "results": results,
        "budget": args.budget if args.command in ("ftc", "completion") else None,
        "horizon": str(args.bound) if args.command in ("spectrum", "gaps") else args.horizon,
        "exact": True,
        "timing_seconds": round(time.perf_counter() - start, 6),
    }
    return code, json.dumps(report, indent=2) + "\n"


def main(argv: list[str] | None = None) -> None:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_INCONCLUSIVE) else sys.stderr
    stream.write(text)
    sys.exit(code)
