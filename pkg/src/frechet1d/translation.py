"""Fréchet distance under translation: ``min over t of d_F(P, Q + t)``."""

from __future__ import annotations

import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .core import TimeSeries, inflate, to_scalar
from .grid import build_frame
from .signature import compute_extended_signature
from .sweep import ENTRY, EXIT, Flip, SweepEngine, SweepStats, representatives, run_sweep

__all__ = [
    "TranslationEvents",
    "translation_representatives",
    "deadlock_free_translations",
    "decide_under_translation",
    "align_translations",
    "select_half_difference",
    "optimize_translation",
]


@dataclass(frozen=True)
class TranslationEvents:
    """Sorted boundaries, the perturbed flip sequence and the representatives.

    ``representatives[r] = (t, k)``: translating by ``t`` realizes the sign
    matrix reached after the first ``k`` flips.
    """

    boundaries: Tuple
    flips: Tuple[Flip, ...]
    representatives: Tuple[Tuple[object, int], ...]

    @property
    def values(self) -> List:
        return [t for t, _ in self.representatives]


def _gap(x, y):
    return x + 1 if y is None else (x + y) / 2


def translation_representatives(P: TimeSeries, Q: TimeSeries, delta) -> TranslationEvents:
    """Pair ``(i, j)`` is close exactly for ``t`` in ``[P(i)-Q(j)-delta, P(i)-Q(j)+delta]``.

    Far to the left every ``P(i) - Q(j) - t`` is positive (sign ``+1``); each
    pair then enters the band (sign ``0``) and leaves it below (sign ``-1``).
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    flips = []
    for i, p in enumerate(P):
        for j, q in enumerate(Q):
            c = p - q
            flips.append(Flip(c - delta, ENTRY, i, j, 0))
            flips.append(Flip(c + delta, EXIT, i, j, -1))
    flips.sort(key=Flip.key)
    bounds = tuple(sorted({f.at for f in flips}))
    reps = representatives(flips, bounds[0] - 1, _gap)
    return TranslationEvents(bounds, tuple(flips), tuple(reps))


def _engine(P, Q, delta):
    SP, SQ = compute_extended_signature(P, delta), compute_extended_signature(Q, delta)
    frame = build_frame(P, Q, delta, SP, SQ)
    table = [[1] * len(Q) for _ in range(len(P))]
    return SweepEngine(frame, table)


def deadlock_free_translations(P: TimeSeries, Q: TimeSeries, delta, E: Optional[TranslationEvents] = None):
    """Per representative, ``(prefix deadlock-free, suffix deadlock-free)`` from the incremental sweep."""
    E = E or translation_representatives(P, Q, delta)
    eng = _engine(P, Q, delta)
    flags: List[Tuple[bool, bool]] = []
    reps = E.representatives
    r = 0
    for k in range(len(E.flips) + 1):
        if k:
            f = E.flips[k - 1]
            eng.flip(f.i, f.j, f.new)
        while r < len(reps) and reps[r][1] == k:
            pre, suf = eng.deadlocks()
            flags.append((not pre, not suf))
            r += 1
    return flags


def decide_under_translation(P: TimeSeries, Q: TimeSeries, delta, *, tol=0, backend: str = "baseline", stats: Optional[SweepStats] = None):
    """``(True, t)`` with ``d_F(P, Q + t) <= delta`` for the leftmost such representative, else ``(False, None)``."""
    delta = inflate(delta, tol)
    E = translation_representatives(P, Q, delta)
    found, _ = run_sweep(_engine(P, Q, delta), E.flips, E.representatives, backend=backend, stats=stats)
    if found is None:
        return False, None
    return True, E.representatives[found][0]


def align_translations(P: TimeSeries, Q: TimeSeries) -> List:
    """Sorted multiset ``{P(i) - Q(j)}``."""
    return sorted(p - q for p in P for q in Q)


def select_half_difference(T: Sequence, rank: int, *, seed: int = 0):
    """The ``rank``-th smallest ``|t - t'| / 2`` over unordered pairs of ``T`` (1-based rank).

    Randomized selection over the implicit sorted pair matrix; pairs are never
    materialized.  Each round picks a random surviving pair as pivot and
    narrows every row's window by binary search.
    """
    T = sorted(T)
    N = len(T)
    total = N * (N - 1) // 2
    if not 1 <= rank <= total:
        raise IndexError(f"rank {rank} outside 1..{total}")
    rng = random.Random(seed)
    L = [a + 1 for a in range(N)]
    R = [N] * N
    below = 0  # pairs known to be smaller than every survivor
    while True:
        sizes = [R[a] - L[a] for a in range(N)]
        alive = sum(sizes)
        pick = rng.randrange(alive)
        for a in range(N):
            if pick < sizes[a]:
                pivot = T[L[a] + pick] - T[a]
                break
            pick -= sizes[a]
        lt, le = 0, 0
        new_lo, new_hi = [], []
        for a in range(N):
            x = bisect_left(T, T[a] + pivot, L[a], R[a])
            y = bisect_right(T, T[a] + pivot, x, R[a])
            lt += x - L[a]
            le += y - L[a]
            new_lo.append(x)
            new_hi.append(y)
        if below + lt < rank <= below + le:
            return pivot / 2
        if rank <= below + lt:
            R = new_lo
        else:
            below += le
            L = new_hi


def optimize_translation(P: TimeSeries, Q: TimeSeries, *, tol=0, backend: str = "baseline", stats: Optional[SweepStats] = None):
    """``(d_F^T(P, Q), t)`` exactly.

    The optimum is half the gap between two alignment translations, so a
    binary search over ranks of that candidate set, one decision per probe,
    finds it.  Rank 0 stands for the value 0.
    """
    T = align_translations(P, Q)
    zero = to_scalar(0)
    ok, t = decide_under_translation(P, Q, zero, tol=tol, backend=backend, stats=stats)
    if ok:
        return zero, t
    lo, hi = 1, len(T) * (len(T) - 1) // 2
    best = None
    while lo < hi:
        mid = (lo + hi) // 2
        d = select_half_difference(T, mid)
        ok, t = decide_under_translation(P, Q, d, tol=tol, backend=backend, stats=stats)
        if ok:
            hi, best = mid, (d, t)
        else:
            lo = mid + 1
    d = select_half_difference(T, lo)
    if best is None or best[0] != d:
        ok, t = decide_under_translation(P, Q, d, tol=tol, backend=backend, stats=stats)
        if not ok:
            raise AssertionError("largest candidate rejected")
        best = (d, t)
    return best
