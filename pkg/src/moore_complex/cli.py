"""Command-line entry point: ``moore-complex <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .bounds import check_bounds
from .combinatorics import Simplex
from .complex import Complex, degree_profile
from .documents import (
    analysis_document,
    load_document,
    rows_to_csv,
    serialize_complex,
    to_csv,
)
from .errors import ComplexError, ParameterError
from .generators import GenSpec, complete, generate
from .metric import distance, metric_report


def _simplex_arg(text: str) -> Simplex:
    try:
        return Simplex.of(int(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise ParameterError(f"bad simplex literal {text!r}: {exc}") from None


def _range_arg(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ParameterError(f"bad range {text!r}, expected A..B") from None
    if b < a:
        raise ParameterError(f"empty range {text!r}")
    return range(a, b + 1)


def _read(path: str) -> Complex:
    return load_document(Path(path).read_text(encoding="utf-8"))[0]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _render(doc: dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        return to_csv(doc)
    return json.dumps(doc, indent=2) + "\n"


def cmd_gen(args: argparse.Namespace) -> None:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        d=args.d,
        p=args.p,
        r=args.r,
        seed=args.seed,
        max_iters=args.max_iters,
        name=args.name,
        m=args.m,
    )
    if spec.kind != "named" and (spec.n is None or spec.d is None):
        raise ParameterError(f"--kind {spec.kind} needs --n and --d")
    X = generate(spec)
    _emit(serialize_complex(X, {"genspec": spec.to_dict()}), args.out)


def cmd_analyze(args: argparse.Namespace) -> None:
    X = _read(args.inp)
    source: Any = _simplex_arg(args.source) if args.source else 0
    doc = analysis_document(X, source, args.workers)
    _emit(_render(doc, args.format), args.out)


def cmd_check_bounds(args: argparse.Namespace) -> None:
    X = _read(args.inp)
    report = check_bounds(X, metric_report(X, 0, args.workers), degree_profile(X))
    doc = {"n": X.n, "d": X.d, **report.to_dict()}
    _emit(_render(doc, args.format), args.out)


def cmd_dist(args: argparse.Namespace) -> None:
    X = _read(args.inp)
    value = distance(X, _simplex_arg(args.src), _simplex_arg(args.dst))
    print("unreachable" if value is None else value)


SWEEP_COLUMNS = [
    "n", "d", "N", "r", "D", "moore_ball", "diameter_lb_int", "theorem2_radius_bound",
    "theorem2_eccentricity_limit", "theorem1_satisfied", "diameter_lb_satisfied",
    "theorem2_holds",
]


def sweep_rows(n_range: range, d_range: range, workers: int | None = None) -> list[dict]:
    rows = []
    for n in n_range:
        for d in d_range:
            if d < 1 or d + 1 > n:
                continue
            X = complete(n, d)
            rep = check_bounds(X, metric_report(X, 0, workers), degree_profile(X))
            rows.append({
                "n": n,
                "d": d,
                "N": rep.N,
                "r": rep.r,
                "D": rep.diameter,
                "moore_ball": rep.moore_ball_value,
                "diameter_lb_int": rep.diameter_lb_int,
                "theorem2_radius_bound": rep.theorem2_radius_bound,
                "theorem2_eccentricity_limit": rep.theorem2_eccentricity_limit,
                "theorem1_satisfied": rep.theorem1_satisfied,
                "diameter_lb_satisfied": rep.diameter_lb_satisfied,
                "theorem2_holds": rep.theorem2_holds,
            })
    return rows


def cmd_sweep(args: argparse.Namespace) -> None:
    if args.kind != "complete":
        raise ParameterError("sweep supports --kind complete only")
    rows = sweep_rows(_range_arg(args.n_range), _range_arg(args.d_range), args.workers)
    if args.format == "csv":
        text = rows_to_csv(rows)
    else:
        text = json.dumps(rows, indent=2) + "\n"
    _emit(text, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moore-complex",
        description="Facet-path metrics and Moore-type bounds for simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a complex document")
    p.add_argument("--kind", required=True, choices=["complete", "random", "named", "near-regular"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-iters", type=int)
    p.add_argument("--name", help="named graph, e.g. petersen or 'circular_ladder(16)'")
    p.add_argument("--m", type=int, help="size parameter for named graphs")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in [
        ("analyze", cmd_analyze, "degrees, connectivity, metric and bounds"),
        ("check-bounds", cmd_check_bounds, "evaluate bounds and report violations"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--in", dest="inp", required=True)
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out")
        p.add_argument("--workers", type=int, default=None)
        if name == "analyze":
            p.add_argument("--source", help='source simplex, e.g. "1,2"; default rank 0')
        p.set_defaults(func=func)

    p = sub.add_parser("dist", help="distance between two (d-1)-simplices")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("sweep", help="bound table over a range of complete complexes")
    p.add_argument("--kind", default="complete")
    p.add_argument("--n-range", required=True)
    p.add_argument("--d-range", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ComplexError, OSError) as exc:
        print(f"moore-complex: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
