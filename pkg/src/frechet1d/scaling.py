"""Fréchet distance under scaling: ``min over s >= 0 of d_F(P, sQ)`` (directed in ``Q``)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .core import TimeSeries, inflate, to_scalar
from .grid import Frame, build_frame
from .signature import (
    compute_drop_thresholds,
    compute_extended_signature,
    critical_scales,
)
from .static import decide_static, exact_distance
from .sweep import BREAK, ENTRY, EXIT, Flip, SweepEngine, SweepStats, representatives, run_sweep

__all__ = [
    "CoarseArrangement",
    "ScalingEvents",
    "coarse_arrangement",
    "scaling_representatives",
    "deadlock_free_scalings",
    "decide_under_scaling",
    "scaling_value_candidates",
    "optimize_scaling",
]


@dataclass(frozen=True)
class CoarseArrangement:
    """Scale breakpoints of ``Q``'s signature at ``delta``.

    ``pieces[k] = (start, indices)``: for ``s`` in ``(start, next start]`` the
    signature of ``sQ`` has these indices.  ``band_threshold`` is the largest
    ``s`` for which all of ``sQ`` fits in a ``2 * delta`` band; the grid treats
    that case differently even when the indices do not change there.
    """

    pieces: Tuple[Tuple[object, Tuple[int, ...]], ...]
    band_threshold: object

    @property
    def breakpoints(self) -> Tuple:
        return tuple(start for start, _ in self.pieces[1:])

    def sweep_breakpoints(self) -> Tuple:
        out = set(self.breakpoints)
        if self.band_threshold not in (0, math.inf):
            out.add(self.band_threshold)
        return tuple(sorted(out))


def coarse_arrangement(Q: TimeSeries, delta) -> CoarseArrangement:
    if delta <= 0:
        raise ValueError("delta must be positive")
    lo, hi = Q.image()
    band = math.inf if hi == lo else 2 * delta / (hi - lo)
    return CoarseArrangement(tuple(critical_scales(Q, delta)), band)


@dataclass(frozen=True)
class ScalingEvents:
    """Flips over ``s > 0`` (breakpoint events carry a frame index) and representatives.

    ``s = 0`` is always an extra representative, decided directly.
    """

    flips: Tuple[Flip, ...]
    representatives: Tuple[Tuple[object, int], ...]
    frames: Tuple[Frame, ...]
    initial: Tuple[Tuple[int, ...], ...]

    @property
    def values(self) -> List:
        return [to_scalar(0)] + [s for s, _ in self.representatives]


def _sign_at_zero_plus(p, q, delta) -> int:
    # sign of p - s*q against [-delta, delta] for s slightly above 0
    if p > delta or (p == delta and q < 0):
        return 1
    if p < -delta or (p == -delta and q > 0):
        return -1
    return 0


def _frame_at(P, SP, Q, s, delta) -> Frame:
    sQ = Q.scale(s)
    return build_frame(P, sQ, delta, SP, compute_extended_signature(sQ, delta))


def _gap(x, y):
    return x + 1 if y is None else (x + y) / 2


def scaling_representatives(P: TimeSeries, Q: TimeSeries, delta, C: Optional[CoarseArrangement] = None) -> ScalingEvents:
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    flips = []
    for i, p in enumerate(P):
        for j, q in enumerate(Q):
            if q == 0:
                continue
            if q > 0:
                cand = (((p - delta) / q, ENTRY, 0), ((p + delta) / q, EXIT, -1))
            else:
                cand = (((p + delta) / q, ENTRY, 0), ((p - delta) / q, EXIT, 1))
            flips.extend(Flip(at, kind, i, j, new) for at, kind, new in cand if at > 0)
    breaks = ()
    if delta > 0:
        C = C or coarse_arrangement(Q, delta)
        breaks = C.sweep_breakpoints()
    flips.extend(Flip(b, BREAK, -1, -1, k + 1) for k, b in enumerate(breaks))
    flips.sort(key=Flip.key)
    # one frame per stretch between breakpoints, sampled at its right end
    SP = compute_extended_signature(P, delta)
    samples = list(breaks) + [(breaks[-1] if breaks else 0) + 1]
    frames = tuple(_frame_at(P, SP, Q, s, delta) for s in samples)
    start = flips[0].at / 2 if flips else to_scalar(1)
    reps = representatives(flips, start, _gap)
    initial = tuple(tuple(_sign_at_zero_plus(p, q, delta) for q in Q) for p in P)
    return ScalingEvents(tuple(flips), tuple(reps), frames, initial)


def _engine(E: ScalingEvents) -> SweepEngine:
    return SweepEngine(E.frames[0], [list(row) for row in E.initial])


def deadlock_free_scalings(P: TimeSeries, Q: TimeSeries, delta, E: Optional[ScalingEvents] = None):
    """Per sweep representative (``s > 0``), ``(prefix deadlock-free, suffix deadlock-free)``.

    Trackers are rebuilt from scratch at every breakpoint and updated per flip
    in between.
    """
    E = E or scaling_representatives(P, Q, delta)
    eng = _engine(E)
    flags = []
    reps, r = E.representatives, 0
    for k in range(len(E.flips) + 1):
        if k:
            f = E.flips[k - 1]
            if f.order == BREAK:
                eng.rebuild(E.frames[f.new])
            else:
                eng.flip(f.i, f.j, f.new)
        while r < len(reps) and reps[r][1] == k:
            pre, suf = eng.deadlocks()
            flags.append((not pre, not suf))
            r += 1
    return flags


def decide_under_scaling(P: TimeSeries, Q: TimeSeries, delta, *, tol=0, backend: str = "baseline", stats: Optional[SweepStats] = None):
    """``(True, s)`` with ``d_F(P, sQ) <= delta`` for the smallest such representative, else ``(False, None)``."""
    delta = inflate(delta, tol)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    zero = to_scalar(0)
    if decide_static(P, Q.scale(zero), delta):
        return True, zero
    if all(q == 0 for q in Q):
        return False, None
    E = scaling_representatives(P, Q, delta)
    found, _ = run_sweep(_engine(E), E.flips, E.representatives, frames=E.frames, backend=backend, stats=stats)
    if stats is not None:
        stats.representatives += 1
    if found is None:
        return False, None
    return True, E.representatives[found][0]


def scaling_value_candidates(P: TimeSeries, Q: TimeSeries) -> List:
    """Every ``delta`` at which the scaling decision can switch.

    Each closeness boundary ``(P(i) +- delta) / Q(j)`` and each signature
    breakpoint ``delta / c`` is a line in ``delta``; the decision can only
    switch where two of them cross, where a boundary passes ``s = 0``
    (``delta = |P(i)|``), or at 0.
    """
    lines = {(p / q, sg / q) for p in P for q in Q if q != 0 for sg in (-1, 1)}
    th = compute_drop_thresholds(Q).delta_drop
    lo, hi = Q.image()
    scales = {c for c in th if c not in (0, math.inf)}
    if hi > lo:
        scales.add((hi - lo) / 2)
    zero = to_scalar(0)
    lines.update((zero, 1 / c) for c in scales)
    lines = sorted(lines)
    out = {zero}
    out.update(abs(p) for p in P)
    for x in range(len(lines)):
        a0, a1 = lines[x]
        for y in range(x + 1, len(lines)):
            b0, b1 = lines[y]
            if a1 != b1:
                d = (b0 - a0) / (a1 - b1)
                if d >= 0:
                    out.add(d)
    return sorted(out)


def _optimize_directed(P, Q, tol, backend, stats):
    if all(q == 0 for q in Q):
        return exact_distance(P, Q, tol=tol), to_scalar(0)
    cands = scaling_value_candidates(P, Q)
    lo, hi = 0, len(cands) - 1
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        ok, s = decide_under_scaling(P, Q, cands[mid], tol=tol, backend=backend, stats=stats)
        if ok:
            hi, best = mid, (cands[mid], s)
        else:
            lo = mid + 1
    if best is None or best[0] != cands[lo]:
        ok, s = decide_under_scaling(P, Q, cands[lo], tol=tol, backend=backend, stats=stats)
        if not ok:
            raise AssertionError("largest candidate rejected")
        best = (cands[lo], s)
    return best


def optimize_scaling(P: TimeSeries, Q: TimeSeries, *, undirected: bool = False, tol=0, backend: str = "baseline", stats: Optional[SweepStats] = None):
    """``(d_F^S(P, Q), s)`` exactly; ``Q`` is the scaled curve.

    With ``undirected=True`` the smaller of both directions is returned as
    ``(value, s, scaled)`` where ``scaled`` names the curve that was scaled.
    """
    best = _optimize_directed(P, Q, tol, backend, stats)
    if not undirected:
        return best
    other = _optimize_directed(Q, P, tol, backend, stats)
    if other[0] < best[0]:
        return other[0], other[1], "P"
    return best[0], best[1], "Q"
