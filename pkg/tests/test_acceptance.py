"""Acceptance criteria, one test and one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time

from gmpy2 import mpq

from frechet1d.bench import _instance, bench_instance
from frechet1d.core import TimeSeries
from frechet1d.oracle import (
    brute_scaling,
    brute_scaling_value,
    brute_translation,
    brute_translation_value,
    freespace_decide,
    freespace_distance,
    random_instance,
    random_series,
)
from frechet1d.scaling import (
    _engine as scaling_engine,
    deadlock_free_scalings,
    decide_under_scaling,
    optimize_scaling,
    scaling_representatives,
)
from frechet1d.signature import (
    _critical_deltas,
    compute_drop_thresholds,
    compute_extended_signature,
    verify_signature,
)
from frechet1d.static import decide_static, exact_distance
from frechet1d.sweep import BREAK, SweepStats
from frechet1d.translation import (
    _engine as translation_engine,
    deadlock_free_translations,
    decide_under_translation,
    optimize_translation,
    translation_representatives,
)

from helpers import FAMILIES, scratch_deadlock_free

RESULTS: dict = {}

# fixed before measuring; observed maxima are reported next to them
EVENT_BUDGET = 8
BREAK_FACTOR = 8


def _report(no: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  C{no:<2} {title}: {detail}"
    RESULTS[no] = line
    print(line)
    assert ok, line


def _instances(count, base, n_range, skip_zero_q=False):
    out, seed = [], base
    while len(out) < count:
        P, Q, d = random_instance(seed, n_range=n_range, family=FAMILIES[seed % 4])
        seed += 1
        if skip_zero_q and all(q == 0 for q in Q):
            continue
        out.append((P, Q, d))
    return out


def _static_set():
    return _instances(1000, 0, (2, 12))


def test_c01_static_oracle_equivalence():
    t0 = time.perf_counter()
    inst = _static_set()
    bad = sum(decide_static(P, Q, d) != freespace_decide(P, Q, d) for P, Q, d in inst)
    dt = time.perf_counter() - t0
    _report(1, "static decision vs free-space oracle", bad == 0 and dt < 60,
            f"{len(inst) - bad}/{len(inst)} agree in {dt:.1f} s (limit 60 s)")


def test_c02_exact_static_value():
    inst = _static_set()
    bad = sum(exact_distance(P, Q) != freespace_distance(P, Q) for P, Q, _ in inst)
    _report(2, "exact static distance", bad == 0, f"{len(inst) - bad}/{len(inst)} exactly equal")


def test_c03_translation_decision():
    t0 = time.perf_counter()
    inst = _instances(500, 20_000, (2, 10))
    bad = 0
    for P, Q, d in inst:
        ok, t = decide_under_translation(P, Q, d)
        if ok != brute_translation(P, Q, d)[0] or (ok and exact_distance(P, Q.translate(t)) > d):
            bad += 1
    dt = time.perf_counter() - t0
    _report(3, "translation decision vs brute force", bad == 0 and dt < 300,
            f"{len(inst) - bad}/{len(inst)} agree in {dt:.1f} s (limit 300 s)")


def test_c04_translation_value():
    inst = _instances(200, 30_000, (2, 8))
    bad = 0
    for P, Q, _ in inst:
        v, t = optimize_translation(P, Q)
        if v != brute_translation_value(P, Q) or exact_distance(P, Q.translate(t)) != v:
            bad += 1
    ex1 = optimize_translation(TimeSeries([0, 2]), TimeSeries([0, 1]))[0]
    ex2 = optimize_translation(TimeSeries([0, 2]), TimeSeries([2, 0]))[0]
    ok = bad == 0 and ex1 == mpq(1, 2) and ex2 == 2
    _report(4, "translation optimum", ok,
            f"{len(inst) - bad}/{len(inst)} exact; examples {ex1} and {ex2} (want 1/2 and 2)")


def test_c05_scaling_decision():
    inst = _instances(500, 40_000, (2, 10), skip_zero_q=True)
    bad = 0
    for P, Q, d in inst:
        ok, s = decide_under_scaling(P, Q, d)
        if ok != brute_scaling(P, Q, d)[0] or (ok and exact_distance(P, Q.scale(s)) > d):
            bad += 1
    _report(5, "scaling decision vs brute force", bad == 0, f"{len(inst) - bad}/{len(inst)} agree")


def test_c06_scaling_value():
    inst = _instances(200, 50_000, (2, 8))
    bad = 0
    for P, Q, _ in inst:
        v, s = optimize_scaling(P, Q)
        if v != brute_scaling_value(P, Q) or exact_distance(P, Q.scale(s)) != v:
            bad += 1
    v, s = optimize_scaling(TimeSeries([1, 2]), TimeSeries([1, mpq(3, 2)]))
    formula = (2 * 1 - 1 * mpq(3, 2)) / (1 + mpq(3, 2))
    ok = bad == 0 and v == mpq(1, 5) == formula and s == mpq(6, 5)
    _report(6, "scaling optimum", ok,
            f"{len(inst) - bad}/{len(inst)} exact; example value {v} witness {s} (want 1/5 and 6/5)")


def _drive(engine, flips, frames=None):
    """Per-event and per-breakpoint update counts; breakpoints carry the vertex change count."""
    events, breaks = [], []
    for f in flips:
        before = len(engine.updates)
        if f.order == BREAK:
            old = engine.frame
            engine.rebuild(frames[f.new])
            k = sum(a != b for a, b in zip(old.in_q, engine.frame.in_q))
            breaks.append((len(engine.updates) - before, k))
        else:
            engine.flip(f.i, f.j, f.new)
            events.append(len(engine.updates) - before)
    return events, breaks


def _zigzag(n, rng):
    # every interior vertex of Q enters the signature at the same scale
    Q = TimeSeries([0 if k % 2 == 0 else 4 for k in range(n)])
    P = TimeSeries([rng.randint(-8, 8) for _ in range(n)])
    return P, Q, mpq(rng.choice((1, 3, 6)))


def test_c07_structural_budgets():
    fails = []
    worst_ev = worst_br = 0.0
    worst_vertex = 0.0
    for P, Q, d in _instances(500, 60_000, (2, 10)):
        n, m = len(P), len(Q)
        E = translation_representatives(P, Q, d)
        if len(E.representatives) > 2 * n * m + 1:
            fails.append(("T-reps", P, Q, d))
        ev, _ = _drive(translation_engine(P, Q, d), E.flips)
        worst_ev = max(worst_ev, max(ev, default=0))
    for P, Q, d in _instances(500, 70_000, (2, 10), skip_zero_q=True):
        n, m = len(P), len(Q)
        N = max(n, m)
        S = scaling_representatives(P, Q, d)
        if len(S.representatives) + 1 > 2 * n * m + N + 1:
            fails.append(("S-reps", P, Q, d))
        ev, br = _drive(scaling_engine(S), S.flips, S.frames)
        worst_ev = max(worst_ev, max(ev, default=0))
        for cnt, k in br:
            worst_br = max(worst_br, cnt / N)
            worst_vertex = max(worst_vertex, cnt / (N * max(1, k)))
    if worst_ev > EVENT_BUDGET:
        fails.append(("event", worst_ev))
    if worst_br > BREAK_FACTOR:
        fails.append(("break", worst_br))
    # adversarial: many vertices change at one breakpoint; bounded per changed vertex
    rng = random.Random(7)
    for n in (10, 20, 30):
        P, Q, d = _zigzag(n, rng)
        S = scaling_representatives(P, Q, d)
        _, br = _drive(scaling_engine(S), S.flips, S.frames)
        for cnt, k in br:
            worst_vertex = max(worst_vertex, cnt / (n * max(1, k)))
    if worst_vertex > BREAK_FACTOR:
        fails.append(("break-per-vertex", worst_vertex))
    _report(7, "structural budgets", not fails,
            f"{len(fails)} violations; per-event max {worst_ev:.0f} (budget {EVENT_BUDGET}), "
            f"breakpoint max {worst_br:.2f}*max(n,m) on the corpus, "
            f"{worst_vertex:.2f}*max(n,m) per changed vertex incl. adversarial (budget {BREAK_FACTOR})")


def test_c08_sweep_internals():
    bad = reps = 0
    stats = SweepStats()
    for P, Q, d in _instances(300, 80_000, (2, 10)):
        E = translation_representatives(P, Q, d)
        for (t, _), got in zip(E.representatives, deadlock_free_translations(P, Q, d, E)):
            reps += 1
            bad += got != scratch_deadlock_free(P, Q.translate(t), d)
        decide_under_translation(P, Q, d, stats=stats)
    for P, Q, d in _instances(300, 90_000, (2, 10), skip_zero_q=True):
        S = scaling_representatives(P, Q, d)
        for (s, _), got in zip(S.representatives, deadlock_free_scalings(P, Q, d, S)):
            reps += 1
            bad += got != scratch_deadlock_free(P, Q.scale(s), d)
        decide_under_scaling(P, Q, d, stats=stats)
    ok = bad == 0 and stats.shifts_ok and stats.max_shift <= 2
    _report(8, "incremental deadlocks vs recomputation", ok,
            f"{reps - bad}/{reps} representatives agree over 600 instances; max finite shift {stats.max_shift}")


def _rational(rng, lo=-10, hi=10):
    return mpq(rng.randint(lo * 7, hi * 7), rng.randint(1, 7))


def test_c09_metamorphic():
    rng = random.Random(99)
    counts = dict.fromkeys(("shift", "symmetry", "scale", "bounds", "monotone"), 0)
    bad = dict.fromkeys(counts, 0)
    for P, Q, d in _instances(1000, 100_000, (2, 7)):
        dT = optimize_translation(P, Q)[0]
        dS = optimize_scaling(P, Q)[0]
        dF = exact_distance(P, Q)
        c = _rational(rng)
        bad["shift"] += optimize_translation(P, Q.translate(c))[0] != dT
        bad["symmetry"] += optimize_translation(Q, P)[0] != dT
        c = abs(_rational(rng, 1, 5)) or mpq(1, 3)
        bad["scale"] += optimize_scaling(P, Q.scale(c))[0] != dS
        bad["bounds"] += not (dT <= dF and dS <= dF)
        d2 = d + abs(_rational(rng, 0, 3))
        for f in (decide_static, lambda *a: decide_under_translation(*a)[0], lambda *a: decide_under_scaling(*a)[0]):
            bad["monotone"] += f(P, Q, d) and not f(P, Q, d2)
        for k in counts:
            counts[k] += 1
    ok = not any(bad.values())
    detail = ", ".join(f"{k} {counts[k] - bad[k]}/{counts[k]}" for k in counts)
    _report(9, "metamorphic relations", ok, detail)


def _binary_drop(P, j):
    # smallest critical delta at which j has left the signature
    cands = _critical_deltas(P.values)
    if j in compute_extended_signature(P, cands[-1]).vertex_set():
        return float("inf")
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if j in compute_extended_signature(P, cands[mid]).vertex_set():
            lo = mid + 1
        else:
            hi = mid
    return cands[lo]


def test_c10_signature_suite():
    rng = random.Random(10)
    verified = drops = equiv = 0
    bad = []
    for k in range(200):
        fam = FAMILIES[k % 4]
        P = TimeSeries(random_series(rng, rng.randint(2, 14), family=fam, delta=1))
        for x in range(20):
            d = mpq(x, 2)
            ok, clause = verify_signature(P, compute_extended_signature(P, d), d)
            verified += 1
            if not ok:
                bad.append(("verify", P, d, clause))
        th = compute_drop_thresholds(P).delta_drop
        for j in range(1, len(P) - 1):
            drops += 1
            if th[j] != _binary_drop(P, j):
                bad.append(("drop", P, j))
        for _ in range(3):
            s, d = abs(_rational(rng, 1, 6)) or mpq(1, 2), mpq(rng.randint(0, 8), 2)
            equiv += 1
            if compute_extended_signature(P.scale(s), d).indices != compute_extended_signature(P, d / s).indices:
                bad.append(("scale", P, s, d))
    _report(10, "signature suite", not bad,
            f"{verified} signatures verified, {drops} drop thresholds, {equiv} scale checks, {len(bad)} failures")


def test_c11_performance():
    P, Q, d = _instance(64, 0)
    t0 = time.perf_counter()
    decide_under_translation(P, Q, d)
    dt = time.perf_counter() - t0
    row = bench_instance("translation", 64, 0)
    ok = dt < 10 and row["dp_ops"] < row["full_dp_ops"]
    _report(11, "performance at n = m = 64", ok,
            f"translation decision {dt:.2f} s (limit 10 s); sweep dp_ops {row['dp_ops']} vs "
            f"full recomputation {row['full_dp_ops']} (factor {row['factor']}, kernel {row['kernel']})")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
