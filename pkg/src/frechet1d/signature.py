"""Extended signatures and their drop thresholds.

An extended signature of ``P`` at scale ``delta`` is an index sequence
``0 = i_1 <= i_2 < ... < i_{t-1} <= i_t = n - 1``: the alternating
extrema whose swings exceed ``2 * delta``, anchored by the two endpoints.
``i_2`` and ``i_{t-1}`` may coincide with the endpoints; the stretch before
``i_2`` and after ``i_{t-1}`` then lives in a band of width ``2 * delta``.

All indices are 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .core import TimeSeries

__all__ = [
    "ExtendedSignature",
    "VertexThresholds",
    "compute_extended_signature",
    "verify_signature",
    "signature_profile",
    "compute_drop_thresholds",
    "scaling_thresholds",
    "critical_scales",
]


@dataclass(frozen=True)
class ExtendedSignature:
    indices: Tuple[int, ...]
    delta: object

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def second(self) -> int:
        """``i_2``: last vertex of the prefix."""
        return self.indices[1]

    @property
    def penultimate(self) -> int:
        """``i_{t-1}``: first vertex of the suffix."""
        return self.indices[-2]

    def vertex_set(self) -> frozenset:
        return frozenset(self.indices)

    def membership(self, n: int) -> List[bool]:
        out = [False] * n
        for i in self.indices:
            out[i] = True
        return out


def _last_index(vals: Sequence, target, stop: int) -> int:
    # last k < stop with vals[k] == target; 0 if the start value already ties
    if vals[0] == target:
        return 0
    return max(k for k in range(stop) if vals[k] == target)


def _anchors(vals: Sequence, two_d) -> List[int]:
    n = len(vals)
    lo = hi = vals[0]
    j = 1
    while j < n:
        v = vals[j]
        if v - lo > two_d or hi - v > two_d:
            break
        lo, hi = min(lo, v), max(hi, v)
        j += 1
    else:
        # whole series fits in a 2*delta band
        if vals[0] in (lo, hi):
            other = hi if vals[0] == lo else lo
            return [0, _last_index(vals, other, n) if other != vals[0] else n - 1]
        last_lo = _last_index(vals, lo, n)
        last_hi = _last_index(vals, hi, n)
        if last_lo < last_hi:
            return [_last_index(vals, lo, last_hi), last_hi]
        return [_last_index(vals, hi, last_lo), last_lo]

    up = vals[j] > hi
    anchors = [_last_index(vals, lo if up else hi, j)]
    ext = j
    for k in range(j + 1, n):
        v = vals[k]
        if up:
            if v >= vals[ext]:
                ext = k
            elif vals[ext] - v > two_d:
                anchors.append(ext)
                ext, up = k, False
        else:
            if v <= vals[ext]:
                ext = k
            elif v - vals[ext] > two_d:
                anchors.append(ext)
                ext, up = k, True
    anchors.append(ext)
    return anchors


def compute_extended_signature(P: TimeSeries, delta) -> ExtendedSignature:
    """Canonical extended ``delta``-signature of ``P`` in O(n).

    A left-to-right scan with hysteresis ``2 * delta``.  Tied extrema resolve
    to their last occurrence, except that index 0 wins when the start value
    is itself the extreme.  This keeps signatures nested as ``delta`` grows.

    Examples
    --------
    >>> compute_extended_signature(TimeSeries([0, 4, 1, 5]), 0).indices
    (0, 0, 1, 2, 3, 3)
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    anchors = _anchors(P.values, 2 * delta)
    return ExtendedSignature((0, *anchors, len(P) - 1), delta)


def _monotone(vals: Sequence, slack, increasing: bool) -> bool:
    # P(s) <= P(s') + slack for s < s' (increasing); mirrored otherwise
    if increasing:
        run = vals[0]
        for v in vals[1:]:
            if run > v + slack:
                return False
            run = max(run, v)
    else:
        run = vals[0]
        for v in vals[1:]:
            if run < v - slack:
                return False
            run = min(run, v)
    return True


def _between(x, a, b) -> bool:
    return min(a, b) <= x <= max(a, b)


def verify_signature(P: TimeSeries, S: ExtendedSignature, delta) -> Tuple[bool, Optional[str]]:
    """Check every clause of the extended-signature definition by direct scans.

    Returns ``(True, None)`` or ``(False, clause)`` where ``clause`` is one of
    ``"endpoints"``, ``"order"``, ``"non-degenerate"``, ``"monotone"``,
    ``"edge-length"``, ``"range"``.  Duplicated end indices are exempt from
    the non-degeneracy clause.
    """
    idx = S.indices
    n, t = len(P), len(idx)
    vals = P.values
    two_d = 2 * delta
    if t < 3 or idx[0] != 0 or idx[-1] != n - 1:
        return False, "endpoints"
    if any(not 0 <= i < n for i in idx):
        return False, "endpoints"
    if idx[0] > idx[1] or idx[-2] > idx[-1]:
        return False, "order"
    if any(idx[k] >= idx[k + 1] for k in range(1, t - 2)):
        return False, "order"
    for k in range(1, t - 1):
        if (k == 1 and idx[1] == idx[0]) or (k == t - 2 and idx[t - 2] == idx[t - 1]):
            continue
        if _between(vals[idx[k]], vals[idx[k - 1]], vals[idx[k + 1]]):
            return False, "non-degenerate"
    for k in range(t - 1):
        seg = vals[idx[k] : idx[k + 1] + 1]
        if not (_monotone(seg, two_d, True) or _monotone(seg, two_d, False)):
            return False, "monotone"
    if t > 4:
        for k in range(1, t - 2):
            if abs(vals[idx[k]] - vals[idx[k + 1]]) <= two_d:
                return False, "edge-length"
    for k in range(1, t - 2):
        seg = vals[idx[k] : idx[k + 1] + 1]
        a, b = vals[idx[k]], vals[idx[k + 1]]
        if (min(seg), max(seg)) != (min(a, b), max(a, b)):
            return False, "range"
    for lo, hi, anchor in ((0, idx[1], idx[1]), (idx[-2], n - 1, idx[-2])):
        seg = vals[lo : hi + 1]
        c = vals[anchor]
        above = all(c <= v <= c + two_d for v in seg)
        below = all(c - two_d <= v <= c for v in seg)
        if not (above or below):
            return False, "range"
    return True, None


def _critical_deltas(vals: Sequence) -> list:
    zero = vals[0] - vals[0]
    return sorted({zero} | {abs(a - b) / 2 for a in vals for b in vals})


def signature_profile(P: TimeSeries) -> List[Tuple[object, Tuple[int, ...]]]:
    """Piecewise-constant signature as a function of ``delta``.

    Returns ``[(c_0, S_0), (c_1, S_1), ...]`` with ``c_0 = 0``: the signature
    indices equal ``S_k`` for every ``delta`` in ``[c_k, c_{k+1})``.  All
    comparisons in the construction are strict against ``2 * delta``, so
    changes happen only at half-differences of vertex values.  Found by
    bisection over the sorted half-differences.
    """
    cands = _critical_deltas(P.values)

    def sig(k):
        return compute_extended_signature(P, cands[k]).indices

    cache = {0: sig(0), len(cands) - 1: sig(len(cands) - 1)}
    changes = [0]

    def split(lo, hi):
        # invariant: cache holds lo and hi
        if hi - lo <= 1:
            if cache[lo] != cache[hi]:
                changes.append(hi)
            return
        if cache[lo] == cache[hi]:
            return
        mid = (lo + hi) // 2
        cache[mid] = sig(mid)
        split(lo, mid)
        split(mid, hi)

    split(0, len(cands) - 1)
    return [(cands[k], cache[k]) for k in sorted(changes)]


@dataclass(frozen=True)
class VertexThresholds:
    """Per-vertex drop thresholds.

    ``delta_drop[j]``: vertex ``j`` is a signature vertex at scale ``d`` iff
    ``d < delta_drop[j]`` (``inf`` for endpoints).  ``scaling[j]`` (only for
    :func:`scaling_thresholds`): ``sQ[j]`` is a signature vertex iff
    ``s > scaling[j]``.
    """

    delta_drop: Tuple
    scaling: Optional[Tuple] = None


def compute_drop_thresholds(P: TimeSeries) -> VertexThresholds:
    n = len(P)
    profile = signature_profile(P)
    drop = []
    for j in range(n):
        if j in (0, n - 1):
            drop.append(math.inf)
            continue
        last_in = None
        for k, (_, idx) in enumerate(profile):
            if j in idx:
                last_in = k
        if last_in is None:
            drop.append(P.values[0] - P.values[0])
        elif last_in == len(profile) - 1:
            drop.append(math.inf)
        else:
            drop.append(profile[last_in + 1][0])
    return VertexThresholds(tuple(drop))


def scaling_thresholds(Q: TimeSeries, delta) -> VertexThresholds:
    if delta <= 0:
        raise ValueError("delta must be positive")
    th = compute_drop_thresholds(Q)
    zero = delta - delta
    scaling = []
    for d in th.delta_drop:
        if d == math.inf:
            scaling.append(zero)
        elif d == 0:
            scaling.append(math.inf)
        else:
            scaling.append(delta / d)
    return VertexThresholds(th.delta_drop, tuple(scaling))


def critical_scales(Q: TimeSeries, delta) -> List[Tuple[object, Tuple[int, ...]]]:
    """Signature of ``sQ`` at scale ``delta`` as a function of ``s > 0``.

    Returns ``[(b_0, S_0), (b_1, S_1), ...]`` with ``b_0 = 0`` and increasing
    breakpoints: the signature of ``sQ`` is ``S_k`` for ``s`` in
    ``(b_k, b_{k+1}]`` (the last piece is unbounded).  ``s = 0`` itself is
    not covered; there ``sQ`` is constant.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    profile = signature_profile(Q)
    out = []
    zero = delta - delta
    # delta / s in [c_k, c_{k+1})  <=>  s in (delta / c_{k+1}, delta / c_k]
    for k in range(len(profile) - 1, -1, -1):
        c_next = profile[k + 1][0] if k + 1 < len(profile) else None
        start = zero if c_next is None else delta / c_next
        out.append((start, profile[k][1]))
    return out
