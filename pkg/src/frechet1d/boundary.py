"""Prefix and suffix handling: extreme points, preliminary assignments, deadlocks.

The prefix of ``P`` is ``P[0..i_2]`` and the suffix is ``P[i_{t-1}..n-1]``
read backwards, so every suffix question is a prefix question on reversed
curves.  Both fit in a band of width ``2 * delta``, which is what makes the
extreme-point machinery below exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .core import TimeSeries
from .signature import ExtendedSignature

__all__ = [
    "Boundary",
    "boundaries",
    "extreme_point_sequence",
    "check_extreme_point_sequence",
    "preliminary_assignment",
    "has_deadlock",
    "brute_deadlock",
    "decide_boundary_frechet",
    "minimal_matcher",
    "suffix_matcher",
    "matcher_formula",
]

INF = math.inf


@dataclass(frozen=True)
class Boundary:
    series: TimeSeries
    anchor_index: int
    is_suffix: bool = False

    def __len__(self) -> int:
        return len(self.series)


def boundaries(P: TimeSeries, S: ExtendedSignature) -> Tuple[Boundary, Boundary]:
    i2, ipen = S.indices[1], S.indices[-2]
    pre = P.subseries(0, i2, allow_single=True)
    suf = P.subseries(ipen, len(P) - 1, allow_single=True).reverse()
    return Boundary(pre, i2, False), Boundary(suf, ipen, True)


def _series(B) -> TimeSeries:
    return B.series if isinstance(B, Boundary) else B


def extreme_point_sequence(B) -> Tuple[int, ...]:
    """Canonical extreme point sequence of a boundary series.

    Strict running records are grouped into maximal runs of the same kind
    (new max / new min); each run contributes its last index.  The final
    vertex must be a global extremum and is always included.

    >>> extreme_point_sequence(TimeSeries([1, 0, 2, -1, 3]))
    (0, 1, 2, 3, 4)
    >>> extreme_point_sequence(TimeSeries([0, 1, 2]))
    (0, 2)
    """
    vals = _series(B).values
    n = len(vals)
    lo = hi = vals[0]
    seq: List[int] = [0]
    kinds: List[Optional[str]] = [None]
    for k in range(1, n):
        v = vals[k]
        kind = "max" if v > hi else "min" if v < lo else None
        if kind is None:
            continue
        lo, hi = min(lo, v), max(hi, v)
        if kinds[-1] == kind:
            seq[-1] = k
        else:
            seq.append(k)
            kinds.append(kind)
    last = n - 1
    if seq[-1] != last:
        if vals[last] == hi and vals[last] == lo:
            seq.append(last)
        elif vals[last] in (hi, lo):
            kind = "max" if vals[last] == hi else "min"
            if kinds[-1] == kind:
                seq[-1] = last
            else:
                seq.append(last)
        else:
            raise ValueError("last vertex of a boundary must be a global extremum")
    return tuple(seq)


def check_extreme_point_sequence(B, seq: Sequence[int]) -> bool:
    """Both defining clauses, checked by scans."""
    T = _series(B)
    n = len(T)
    if not seq or seq[0] != 0 or seq[-1] != n - 1:
        return False
    if any(a >= b for a, b in zip(seq, seq[1:])):
        return False
    for a in seq:
        if T[a] != T.prefix_min[a] and T[a] != T.prefix_max[a]:
            return False
    for a, b in zip(seq, seq[1:]):
        if (T.prefix_min[b], T.prefix_max[b]) != (min(T[a], T[b]), max(T[a], T[b])):
            return False
    return True


def preliminary_assignment(P, a: Sequence[int], Q, b: Sequence[int], delta) -> List:
    """``X[k]``: first ``l`` with ``|P[a[k]] - Q[b[l]]| <= delta``, else ``inf``."""
    pv, qv = _series(P).values, _series(Q).values
    out = []
    for ak in a:
        x = pv[ak]
        out.append(next((l for l, bl in enumerate(b) if abs(x - qv[bl]) <= delta), INF))
    return out


def has_deadlock(X: Sequence, Y: Sequence) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Whether some ``l < X[k]`` and ``k < Y[l]``, in O(p + q).

    With ``X[0] == 0`` it suffices to inspect ``l = X[k] - 1``.  An infinite
    ``X[k]`` admits every ``l``, so the largest ``Y`` decides.
    """
    if X[0] != 0:
        return True, (0, 0)
    q = len(Y)
    best_l = max(range(q), key=lambda l: Y[l])
    for k, x in enumerate(X):
        if x == 0:
            continue
        if x == INF:
            if k < Y[best_l]:
                return True, (k, best_l)
            continue
        l = x - 1
        if k < Y[l]:
            return True, (k, l)
    return False, None


def brute_deadlock(X: Sequence, Y: Sequence) -> bool:
    return any(l < X[k] and k < Y[l] for k in range(len(X)) for l in range(len(Y)))


def _assignments(P, Q, delta):
    a, b = extreme_point_sequence(P), extreme_point_sequence(Q)
    X = preliminary_assignment(P, a, Q, b, delta)
    Y = preliminary_assignment(Q, b, P, a, delta)
    return X, Y


def decide_boundary_frechet(P, Q, delta) -> bool:
    """``d_F(P, Q) <= delta`` for two boundary series, each within a ``2 * delta`` band."""
    Ps, Qs = _series(P), _series(Q)
    X, Y = _assignments(Ps, Qs, delta)
    if has_deadlock(X, Y)[0]:
        return False
    if abs(Ps[0] - Qs[0]) > delta or abs(Ps[-1] - Qs[-1]) > delta:
        return False
    (plo, phi), (qlo, qhi) = Ps.image(), Qs.image()
    return qlo - delta <= plo and phi <= qhi + delta and plo - delta <= qlo and qhi <= phi + delta


def matcher_formula(lo, hi, target, Q: TimeSeries, j2: int, delta) -> Optional[int]:
    """First ``w <= j2`` with ``|target - Q[w]| <= delta`` and
    ``[lo, hi]`` inside the ``delta``-neighbourhood of ``im(Q[0..min(w+1, j2)])``.

    Assumes no deadlock; the caller checks that.  The image condition is
    monotone in ``w`` and found by bisection; the distance condition is then
    scanned forward.
    """

    def covered(w):
        c = min(w + 1, j2)
        return Q.prefix_min[c] - delta <= lo and hi <= Q.prefix_max[c] + delta

    left, right = 0, j2
    if not covered(right):
        return None
    while left < right:
        mid = (left + right) // 2
        if covered(mid):
            right = mid
        else:
            left = mid + 1
    qv = Q.values
    for w in range(left, j2 + 1):
        if abs(target - qv[w]) <= delta:
            return w
    return None


def minimal_matcher(P, Q: TimeSeries, j2: int, delta) -> Optional[int]:
    """Minimal matcher of the boundary ``P`` on ``Q[0..j2]``; ``None`` when none exists."""
    Ps = _series(P)
    Qp = Q.subseries(0, j2, allow_single=True)
    X, Y = _assignments(Ps, Qp, delta)
    if any(x == INF for x in X) or has_deadlock(X, Y)[0]:
        return None
    lo, hi = Ps.image()
    return matcher_formula(lo, hi, Ps[-1], Q, j2, delta)


def suffix_matcher(P, Q: TimeSeries, j_pen: int, delta) -> Optional[int]:
    """Minimal matcher for the reversed suffix ``P`` on ``Q[j_pen..m-1]``, as an index of ``Q``."""
    m = len(Q)
    w = minimal_matcher(P, Q.reverse(), m - 1 - j_pen, delta)
    return None if w is None else m - 1 - w
