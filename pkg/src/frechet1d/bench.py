"""Benchmark harness: sweep cost against per-representative recomputation.

Every row reports the sweep's own counters and ``full_dp_ops``, the number of
cells a from-scratch reachability pass would visit if the whole grid were
recomputed at every representative.  ``factor`` is their ratio.  Passing
``verify=True`` also times that recomputation for real (slow; small ``n``).
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional

from .core import TimeSeries, to_scalar
from .reach import KERNEL, BaselineBackend, PyReachGrid, ReachGrid
from .scaling import decide_under_scaling, scaling_representatives
from .static import decide_static, exact_distance
from .sweep import SweepStats, run_sweep
from .translation import _engine as translation_engine
from .translation import decide_under_translation, translation_representatives

__all__ = ["COLUMNS", "DEFAULT_SIZES", "bench_seed", "bench_instance", "run_bench", "reference_cost", "compare_kernels"]

COLUMNS = (
    "variant", "n", "seed", "events", "representatives", "cell_updates",
    "dp_ops", "full_dp_ops", "factor", "elapsed_ms", "kernel",
)
DEFAULT_SIZES = (16, 32, 64, 128)


def bench_seed(default: int = 0) -> int:
    raw = os.environ.get("FRECHET1D_SEED")
    return int(raw) if raw not in (None, "") else default


def _series(rng: random.Random, n: int) -> TimeSeries:
    # distinct-ish rationals so boundaries rarely coincide
    return TimeSeries([to_scalar(rng.randint(-10**6, 10**6)) / 997 for _ in range(n)])


def _instance(n: int, seed: int):
    rng = random.Random(seed * 1009 + n)
    P, Q = _series(rng, n), _series(rng, n)
    # half the static distance: usually infeasible, so the sweep runs to the end
    return P, Q, exact_distance(P, Q) / 2


def reference_cost(P: TimeSeries, Q: TimeSeries, delta, variant: str) -> float:
    """Seconds to decide every representative from scratch (the naive alternative)."""
    t0 = time.perf_counter()
    if variant == "translation":
        for t in translation_representatives(P, Q, delta).values:
            decide_static(P, Q.translate(t), delta)
    else:
        for s in scaling_representatives(P, Q, delta).values:
            decide_static(P, Q.scale(s), delta)
    return time.perf_counter() - t0


def bench_instance(variant: str, n: int, seed: int, *, verify: bool = False) -> Dict[str, object]:
    P, Q, delta = _instance(n, seed)
    st = SweepStats()
    t0 = time.perf_counter()
    if variant == "translation":
        decide_under_translation(P, Q, delta, stats=st)
    elif variant == "scaling":
        decide_under_scaling(P, Q, delta, stats=st)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    elapsed = (time.perf_counter() - t0) * 1000
    full = st.representatives * (2 * len(P) - 1) * (2 * len(Q) - 1)
    row: Dict[str, object] = {
        "variant": variant,
        "n": n,
        "seed": seed,
        "events": st.events,
        "representatives": st.representatives,
        "cell_updates": st.cell_updates,
        "dp_ops": st.dp_ops,
        "full_dp_ops": full,
        "factor": round(full / max(st.dp_ops, 1), 2),
        "elapsed_ms": round(elapsed, 1),
        "kernel": KERNEL,
    }
    if verify:
        row["reference_ms"] = round(reference_cost(P, Q, delta, variant) * 1000, 1)
    return row


def run_bench(
    sizes: Iterable[int] = DEFAULT_SIZES,
    variants: Iterable[str] = ("translation",),
    seeds: int = 1,
    seed: Optional[int] = None,
    jobs: int = 1,
    verify: bool = False,
) -> List[Dict[str, object]]:
    base = bench_seed(0) if seed is None else seed
    tasks = [(v, n, base + k) for v in variants for n in sizes for k in range(seeds)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda a: bench_instance(*a, verify=verify), tasks))
    return [bench_instance(*a, verify=verify) for a in tasks]


def compare_kernels(n: int = 64, seed: int = 0, repeat: int = 3) -> Dict[str, object]:
    """Replay one translation sweep's update list through each grid kernel.

    Both kernels see the same initial grid, updates and query prefixes, so
    the timings isolate the reachability kernel.
    """
    P, Q, delta = _instance(n, seed)
    E = translation_representatives(P, Q, delta)
    marks: List[int] = []
    eng = translation_engine(P, Q, delta)
    run_sweep(eng, E.flips, E.representatives, on_rep=lambda r, e: marks.append(len(e.updates)))
    kernels = {"python": PyReachGrid}
    if ReachGrid is not PyReachGrid:
        kernels["cython"] = ReachGrid
    row: Dict[str, object] = {"n": n, "seed": seed, "updates": len(eng.updates), "queries": len(marks)}
    answers = {}
    for name, kernel in kernels.items():
        best = float("inf")
        for _ in range(repeat):
            be = BaselineBackend(eng.initial, eng.updates, kernel=kernel)
            t0 = time.perf_counter()
            answers[name] = be.answers(set(marks))
            best = min(best, time.perf_counter() - t0)
        row[f"{name}_ms"] = round(best * 1000, 2)
    if "cython" in answers:
        if answers["cython"] != answers["python"]:
            raise AssertionError("kernels disagree")
        row["speedup"] = round(row["python_ms"] / max(row["cython_ms"], 1e-9), 2)
    return row
