"""Command line interface: compute one polynomial, or benchmark the table.

Exit codes: 0 success, 1 bad arguments, 2 braid closure is not a knot.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import kernels
from .braid import BraidWord, NotAKnotError, parse_braid
from .cjp import colored_jones, simple_walk_count
from .burau import unpruned_walk_count
from .oracle import naive_colored_jones
from .table import KnotRecord, knot_lookup, load_table


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; keep 2 for non-knot only
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="walkjones", description=__doc__)
    parser.add_argument("--backend", choices=("auto", "pure", "native"), default=None,
                        help="kernel backend override (default: native when built, else pure)")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="compute the colored Jones polynomial of one braid closure")
    src = comp.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", help="braid word as signed generator indices, e.g. '-1 2 -1 2'")
    src.add_argument("--knot", help="name from the bundled knot table, e.g. 4_1")
    comp.add_argument("--color", type=int, default=2, help="color N >= 1 (default 2; 2 = Jones polynomial)")
    comp.add_argument("--strands", type=int, default=None, help="strand count override for --braid")
    comp.add_argument("--eval-q", default=None, metavar="COMPLEX",
                      help="additionally evaluate the polynomial at this q (e.g. '0.5+0.5j')")
    comp.add_argument("--format", choices=("text", "json"), default="text")
    comp.add_argument("--no-mirror-opt", action="store_true", help="disable mirror orientation selection")
    comp.add_argument("--no-drl", action="store_true", help="disable duplicate-reduction pruning")
    comp.add_argument("--table", default=None, help="knot table CSV overriding the bundled one")
    comp.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)

    bench = sub.add_parser("bench", help="benchmark the knot table, CSV to stdout")
    bench.add_argument("--max-crossings", type=int, default=9)
    bench.add_argument("--colors", default="2", help="comma-separated color list (default '2')")
    bench.add_argument("--with-no-drl", action="store_true",
                       help="also count level-one walks without duplicate reduction")
    bench.add_argument("--table", default=None, help="knot table CSV overriding the bundled one")
    bench.add_argument("--threads", type=int, default=1, help="worker threads (rows stay in table order)")

    back = sub.add_parser("bench-backends", help="compare pure and native kernel backends, CSV to stdout")
    back.add_argument("--max-crossings", type=int, default=7)
    back.add_argument("--colors", default="2,3")
    back.add_argument("--table", default=None)
    return parser


def _parse_colors(text: str) -> list[int]:
    try:
        colors = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"bad color list {text!r}")
    if not colors or any(n < 1 for n in colors):
        raise ValueError(f"colors must be >= 1, got {text!r}")
    return colors


def _resolve_braid(args) -> tuple[str, BraidWord]:
    if args.knot is not None:
        rec = knot_lookup(args.knot, load_table(args.table) if args.table else None)
        return rec.name, rec.braid_word()
    return args.braid, parse_braid(args.braid, args.strands)


def cmd_compute(args) -> int:
    try:
        label, braid = _resolve_braid(args)
    except (ValueError, KeyError) as exc:
        print(f"walkjones: {exc}", file=sys.stderr)
        return 1
    if args.color < 1:
        print(f"walkjones: color must be >= 1, got {args.color}", file=sys.stderr)
        return 1

    start = time.perf_counter()
    try:
        if args.oracle:
            poly = naive_colored_jones(braid, args.color)
            result = None
        else:
            result = colored_jones(
                braid,
                args.color,
                mirror_opt=not args.no_mirror_opt,
                drl=not args.no_drl,
            )
            poly = result.polynomial
    except NotAKnotError as exc:
        print(f"walkjones: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    value = None
    if args.eval_q is not None:
        try:
            q0 = complex(args.eval_q.replace("i", "j"))
            value = poly.eval_at(q0)
        except ValueError as exc:
            print(f"walkjones: bad --eval-q value: {exc}", file=sys.stderr)
            return 1

    if args.format == "json":
        payload = {
            "input": label,
            "n": args.color,
            "mirror_used": result.mirror_used if result else False,
            "framing_exponent": result.framing_exponent if result else None,
            "heights_summed": result.heights_summed if result else None,
            "simple_walks": result.simple_walk_count if result else None,
            "terms": [{"exp": e, "coeff": c} for e, c in sorted(poly.terms.items())],
            "time_ms": elapsed_ms,
        }
        if args.oracle:
            payload["oracle"] = True
        if value is not None:
            payload["eval"] = {"q": args.eval_q, "value": [value.real, value.imag]}
        print(json.dumps(payload))
    else:
        print(poly.format())
        if value is not None:
            print(f"J({args.eval_q}) = {value}")
    return 0


def _bench_row(rec: KnotRecord, color: int, with_no_drl: bool) -> dict:
    braid = rec.braid_word()
    walks = simple_walk_count(braid)
    walks_mirror = simple_walk_count(braid.mirror())
    no_drl = unpruned_walk_count(braid) if with_no_drl else ""
    start = time.perf_counter()
    result = colored_jones(braid, color)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return {
        "name": rec.name,
        "crossings": rec.crossings,
        "strands": braid.strands,
        "simple_walks": walks,
        "simple_walks_mirror": walks_mirror,
        "walks_no_drl": no_drl,
        "N": color,
        "heights": result.heights_summed,
        "time_ms": f"{elapsed_ms:.3f}",
        "terms": len(result.polynomial.terms),
        "_poly": result.polynomial.format(),
    }


BENCH_COLUMNS = ["name", "crossings", "strands", "simple_walks", "simple_walks_mirror",
                 "walks_no_drl", "N", "heights", "time_ms", "terms"]


def bench_rows(records, colors, with_no_drl=False, threads=1):
    """Benchmark rows in table order regardless of completion order."""
    jobs = [(rec, color) for rec in records for color in colors]
    if threads <= 1:
        return [_bench_row(rec, color, with_no_drl) for rec, color in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_bench_row, rec, color, with_no_drl) for rec, color in jobs]
        return [f.result() for f in futures]


def cmd_bench(args) -> int:
    try:
        colors = _parse_colors(args.colors)
        records = [r for r in load_table(args.table) if r.crossings <= args.max_crossings]
    except (ValueError, OSError) as exc:
        print(f"walkjones: {exc}", file=sys.stderr)
        return 1
    rows = bench_rows(records, colors, with_no_drl=args.with_no_drl, threads=args.threads)
    print(",".join(BENCH_COLUMNS))
    for row in rows:
        print(",".join(str(row[c]) for c in BENCH_COLUMNS))
    return 0


def cmd_bench_backends(args) -> int:
    try:
        colors = _parse_colors(args.colors)
        records = [r for r in load_table(args.table) if r.crossings <= args.max_crossings]
    except (ValueError, OSError) as exc:
        print(f"walkjones: {exc}", file=sys.stderr)
        return 1
    names = kernels.available_backends()
    if "native" not in names:
        print("walkjones: native backend not built; comparing pure against itself", file=sys.stderr)
    print("name,N,backend,time_ms,terms")
    mismatch = False
    for rec in records:
        braid = rec.braid_word()
        for color in colors:
            polys = {}
            for backend in names:
                with kernels.use_backend(backend):
                    start = time.perf_counter()
                    result = colored_jones(braid, color)
                    elapsed_ms = (time.perf_counter() - start) * 1000.0
                polys[backend] = result.polynomial
                print(f"{rec.name},{color},{backend},{elapsed_ms:.3f},{len(result.polynomial.terms)}")
            if len({p.format() for p in polys.values()}) > 1:
                mismatch = True
                print(f"walkjones: backend mismatch on {rec.name} N={color}", file=sys.stderr)
    return 1 if mismatch else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.backend:
        try:
            kernels.set_backend(args.backend)
        except ValueError as exc:
            print(f"walkjones: {exc}", file=sys.stderr)
            return 1
    if args.command == "compute":
        return cmd_compute(args)
    if args.command == "bench":
        return cmd_bench(args)
    return cmd_bench_backends(args)


if __name__ == "__main__":
    sys.exit(main())
