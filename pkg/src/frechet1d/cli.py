"""Command-line front end.

    frechet1d decide P Q --delta D
    frechet1d distance P Q
    frechet1d decide-translation P Q --delta D
    frechet1d translation-distance P Q
    frechet1d decide-scaling P Q --delta D
    frechet1d scaling-distance P Q [--undirected]
    frechet1d oracle <command> P Q ...
    frechet1d bench [--sizes 16,32] [--out bench.csv] [--kernels]
    frechet1d selftest

Results are one JSON object on stdout.  Exit codes: 0 success, 1 a "no"
under ``--exit-status``, 2 bad input, 3 oracle mismatch under ``--check``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import List, Optional

from . import oracle
from .bench import COLUMNS, DEFAULT_SIZES, bench_seed, compare_kernels, run_bench
from .core import inflate, parse_scalar, render
from .ingest import InputError, ingest
from .reach import available_backends
from .scaling import decide_under_scaling, optimize_scaling
from .static import decide_static, exact_distance
from .sweep import SweepStats
from .translation import decide_under_translation, optimize_translation

__all__ = ["main", "build_parser", "COMMANDS"]

COMMANDS = (
    "decide",
    "distance",
    "decide-translation",
    "translation-distance",
    "decide-scaling",
    "scaling-distance",
)
DECISIONS = {"decide", "decide-translation", "decide-scaling"}


class Mismatch(Exception):
    pass


def _add_pair_args(p: argparse.ArgumentParser, command: str) -> None:
    p.add_argument("p", help="first series (CSV or JSON)")
    p.add_argument("q", help="second series (CSV or JSON)")
    if command in DECISIONS:
        p.add_argument("--delta", required=True, help="threshold, decimal or p/q")
    if command == "scaling-distance":
        p.add_argument("--undirected", action="store_true", help="minimize over scaling either curve")
    p.add_argument("--format", choices=("csv", "json"), help="override extension sniffing")
    p.add_argument("--float", dest="as_float", action="store_true", help="float arithmetic (needs --tol)")
    p.add_argument("--tol", default=None, help="float-mode tolerance added to delta")
    p.add_argument("--backend", default="baseline", help="reachability backend")
    p.add_argument("--check", action="store_true", help="re-verify against the brute-force oracle")
    p.add_argument("--exit-status", action="store_true", help="exit 1 when a decision is no")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frechet1d", description="Exact 1D Fréchet distance tools.")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        _add_pair_args(sub.add_parser(cmd), cmd)
    orc = sub.add_parser("oracle", help="run the brute-force reference instead")
    osub = orc.add_subparsers(dest="oracle_command", required=True)
    for cmd in COMMANDS:
        _add_pair_args(osub.add_parser(cmd), cmd)
    b = sub.add_parser("bench", help="write sweep cost measurements as CSV")
    b.add_argument("--sizes", default=",".join(map(str, DEFAULT_SIZES)))
    b.add_argument("--variants", default="translation,scaling")
    b.add_argument("--seeds", type=int, default=1, help="instances per size")
    b.add_argument("--seed", type=int, default=None, help="base seed (FRECHET1D_SEED also works)")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--verify", action="store_true", help="also time full recomputation per representative")
    b.add_argument("--kernels", action="store_true", help="compare the compiled and pure-Python grid kernels instead")
    b.add_argument("--out", default="bench.csv", help="CSV path, '-' for stdout")
    s = sub.add_parser("selftest", help="compare pipeline and oracle on seeded instances")
    s.add_argument("--count", type=int, default=50)
    return parser


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _scalar(text: str, as_float: bool):
    try:
        v = float(parse_scalar(text)) if as_float else parse_scalar(text)
    except ValueError as exc:
        raise InputError(str(exc), None, "argument") from None
    if v < 0:
        raise InputError(f"negative value {text!r}", None, "argument")
    return v


def _pipeline(cmd, P, Q, args, tol, st):
    delta = getattr(args, "delta_value", None)
    kw = dict(tol=tol, backend=args.backend, stats=st)
    if cmd == "decide":
        return decide_static(P, Q, delta, tol=tol), None
    if cmd == "distance":
        return exact_distance(P, Q, tol=tol), None
    if cmd == "decide-translation":
        return decide_under_translation(P, Q, delta, **kw)
    if cmd == "translation-distance":
        return optimize_translation(P, Q, **kw)
    if cmd == "decide-scaling":
        return decide_under_scaling(P, Q, delta, **kw)
    if getattr(args, "undirected", False):
        value, s, scaled = optimize_scaling(P, Q, undirected=True, **kw)
        return value, s, scaled
    return optimize_scaling(P, Q, **kw)


def _oracle(cmd, P, Q, args, tol):
    delta = getattr(args, "delta_value", None)
    d = None if delta is None else inflate(delta, tol)
    if cmd == "decide":
        return oracle.freespace_decide(P, Q, d), None
    if cmd == "distance":
        return oracle.freespace_distance(P, Q), None
    if cmd == "decide-translation":
        return oracle.brute_translation(P, Q, d)
    if cmd == "translation-distance":
        v = oracle.brute_translation_value(P, Q)
        return v, oracle.brute_translation(P, Q, v)[1]
    if cmd == "decide-scaling":
        return oracle.brute_scaling(P, Q, d)
    v = oracle.brute_scaling_value(P, Q)
    if getattr(args, "undirected", False):
        w = oracle.brute_scaling_value(Q, P)
        if w < v:
            return w, oracle.brute_scaling(Q, P, w)[1], "P"
        return v, oracle.brute_scaling(P, Q, v)[1], "Q"
    return v, oracle.brute_scaling(P, Q, v)[1]


def _agree(cmd, mine, ref, tol) -> bool:
    if cmd in DECISIONS:
        return mine[0] == ref[0]
    return abs(mine[0] - ref[0]) <= (tol or 0)


def _run_pair(args, use_oracle: bool) -> int:
    cmd = args.oracle_command if use_oracle else args.command
    if args.as_float and args.tol is None:
        raise InputError("--float requires --tol", None, "argument")
    if args.tol is not None and not args.as_float:
        raise InputError("--tol only applies with --float", None, "argument")
    tol = _scalar(args.tol, True) if args.as_float else 0
    if args.backend not in available_backends():
        raise InputError(f"unknown backend {args.backend!r}", None, "argument")
    P = ingest(args.p, args.format, as_float=args.as_float)
    Q = ingest(args.q, args.format, as_float=args.as_float)
    if cmd in DECISIONS:
        args.delta_value = _scalar(args.delta, args.as_float)
    st = SweepStats(backend=args.backend)
    t0 = time.perf_counter()
    result = _oracle(cmd, P, Q, args, tol) if use_oracle else _pipeline(cmd, P, Q, args, tol, st)
    elapsed = (time.perf_counter() - t0) * 1000
    if args.check and not use_oracle:
        ref = _oracle(cmd, P, Q, args, tol)
        if not _agree(cmd, result, ref, tol):
            raise Mismatch(f"pipeline {result[0]!r} disagrees with oracle {ref[0]!r}")
    out: dict = {"command": ("oracle " if use_oracle else "") + cmd}
    if cmd in DECISIONS:
        out["decision"] = bool(result[0])
    else:
        out["distance"] = render(result[0])
    if cmd not in ("decide", "distance") and result[1] is not None:
        out["witness"] = render(result[1])
    if len(result) > 2:
        out["scaled"] = result[2]
    stats = {"events": st.events, "cell_updates": st.cell_updates, "backend": args.backend}
    if not args.no_timing:
        stats["elapsed_ms"] = round(elapsed, 3)
    out["stats"] = stats
    _emit(out)
    if args.exit_status and cmd in DECISIONS and not result[0]:
        return 1
    return 0


def _run_bench(args) -> int:
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x]
    except ValueError:
        raise InputError(f"bad --sizes {args.sizes!r}", None, "argument") from None
    variants = [v for v in args.variants.split(",") if v]
    for v in variants:
        if v not in ("translation", "scaling"):
            raise InputError(f"unknown variant {v!r}", None, "argument")
    if args.kernels:
        base = bench_seed(0) if args.seed is None else args.seed
        rows = [compare_kernels(n, base + k) for n in sizes for k in range(args.seeds)]
        cols = list(rows[0]) if rows else ["n"]
    else:
        rows = run_bench(sizes, variants, args.seeds, args.seed, args.jobs, args.verify)
        cols = list(COLUMNS) + (["reference_ms"] if args.verify else [])
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="", encoding="utf-8")
    try:
        w = csv.DictWriter(fh, fieldnames=cols)
        w.writeheader()
        w.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.out != "-":
        key = "speedup" if args.kernels else "factor"
        summary = {f"{r.get('variant', 'kernel')}@{r['n']}": r.get(key) for r in rows}
        _emit({"command": "bench", "rows": len(rows), "out": args.out, key: summary})
    return 0


def _run_selftest(args) -> int:
    passed = failed = 0
    for seed in range(args.count):
        P, Q, d = oracle.random_instance(seed, n_range=(2, 7))
        checks = [
            (decide_static(P, Q, d), oracle.freespace_decide(P, Q, d)),
            (exact_distance(P, Q), oracle.freespace_distance(P, Q)),
            (decide_under_translation(P, Q, d)[0], oracle.brute_translation(P, Q, d)[0]),
        ]
        if any(q != 0 for q in Q):
            checks.append((decide_under_scaling(P, Q, d)[0], oracle.brute_scaling(P, Q, d)[0]))
        for mine, ref in checks:
            if mine == ref:
                passed += 1
            else:
                failed += 1
    _emit({"command": "selftest", "passed": passed, "failed": failed})
    return 0 if failed == 0 else 3


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "bench":
            return _run_bench(args)
        if args.command == "selftest":
            return _run_selftest(args)
        return _run_pair(args, args.command == "oracle")
    except InputError as exc:
        print(f"frechet1d: input error: {exc}", file=sys.stderr)
        return 2
    except Mismatch as exc:
        print(f"frechet1d: oracle mismatch: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
