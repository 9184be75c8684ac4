"""Brute-force reference implementations.

Nothing in this module calls into the signature / matrix / sweep
pipeline; equivalence tests are only meaningful if the two sides are
independent.  Everything here is slow on purpose.
"""

from __future__ import annotations

import random
from typing import Optional

from .core import TimeSeries, to_scalar

__all__ = [
    "free_interval",
    "freespace_decide",
    "freespace_end_reachable",
    "freespace_distance",
    "critical_values",
    "translation_candidates",
    "brute_translation",
    "brute_translation_value",
    "scaling_candidates",
    "brute_scaling",
    "brute_scaling_value",
    "brute_min_matcher",
    "random_instance",
    "random_series",
]


def free_interval(p, a, b, delta):
    """Parameters ``x`` in [0, 1] with ``|a + x (b - a) - p| <= delta``, or None."""
    d = b - a
    if d == 0:
        return (0, 1) if abs(a - p) <= delta else None
    lo = (p - delta - a) / d
    hi = (p + delta - a) / d
    if lo > hi:
        lo, hi = hi, lo
    lo = max(lo, 0)
    hi = min(hi, 1)
    if lo > hi:
        return None
    return (lo, hi)


def _clip_from(interval, start):
    if interval is None or start is None:
        return None
    lo, hi = interval
    lo = max(lo, start)
    return (lo, hi) if lo <= hi else None


def _propagate(P, Q, delta):
    """Alt-Godau reachable boundary intervals.

    Returns ``(B, L)`` where ``B[i][j]`` is the reachable part of the
    horizontal segment ``{Q-param = j} x [i, i+1]`` and ``L[i][j]`` the
    reachable part of the vertical segment ``{P-param = i} x [j, j+1]``.
    """
    n, m = len(P), len(Q)
    B = [[None] * m for _ in range(max(n - 1, 0))]
    L = [[None] * max(m - 1, 0) for _ in range(n)]
    if abs(P[0] - Q[0]) > delta:
        return B, L
    # bottom row and left column: movement along a single line
    for i in range(n - 1):
        if i > 0 and (B[i - 1][0] is None or B[i - 1][0][1] != 1):
            break
        f = free_interval(Q[0], P[i], P[i + 1], delta)
        if f is None or f[0] != 0:
            break
        B[i][0] = f
    for j in range(m - 1):
        if j > 0 and (L[0][j - 1] is None or L[0][j - 1][1] != 1):
            break
        f = free_interval(P[0], Q[j], Q[j + 1], delta)
        if f is None or f[0] != 0:
            break
        L[0][j] = f
    for i in range(n - 1):
        for j in range(m - 1):
            bot, left = B[i][j], L[i][j]
            right_free = free_interval(P[i + 1], Q[j], Q[j + 1], delta)
            top_free = free_interval(Q[j + 1], P[i], P[i + 1], delta)
            if bot is not None:
                L[i + 1][j] = right_free
            elif left is not None:
                L[i + 1][j] = _clip_from(right_free, left[0])
            if left is not None:
                B[i][j + 1] = top_free
            elif bot is not None:
                B[i][j + 1] = _clip_from(top_free, bot[0])
    return B, L


def freespace_decide(P: TimeSeries, Q: TimeSeries, delta) -> bool:
    """Continuous Fréchet decision ``d_F(P, Q) <= delta`` by free-space propagation."""
    n, m = len(P), len(Q)
    if abs(P[0] - Q[0]) > delta or abs(P[n - 1] - Q[m - 1]) > delta:
        return False
    B, L = _propagate(P, Q, delta)
    if n == 1 and m == 1:
        return True
    if n == 1:
        return L[0][m - 2] is not None and L[0][m - 2][1] == 1
    if m == 1:
        return B[n - 2][0] is not None and B[n - 2][0][1] == 1
    top = B[n - 2][m - 1]
    right = L[n - 1][m - 2]
    return (top is not None and top[1] == 1) or (right is not None and right[1] == 1)


def freespace_end_reachable(P: TimeSeries, Q: TimeSeries, delta):
    """Reachable parameters on the line where P has been fully traversed.

    Returns ``(edges, verts)``: ``edges[j]`` is the reachable sub-interval of
    Q's edge ``j`` (local parameter in [0, 1]) and ``verts[j]`` tells whether
    the point ``(n - 1, j)`` is reachable, i.e. ``d_F(P, Q[0, j]) <= delta``.
    """
    n, m = len(P), len(Q)
    B, L = _propagate(P, Q, delta)
    edges = [L[n - 1][j] for j in range(m - 1)]
    verts = []
    for j in range(m):
        if j == 0:
            ok = abs(P[0] - Q[0]) <= delta and (n == 1 or (B[n - 2][0] is not None and B[n - 2][0][1] == 1))
        else:
            below = edges[j - 1] is not None and edges[j - 1][1] == 1
            left = n > 1 and B[n - 2][j] is not None and B[n - 2][j][1] == 1
            ok = below or left
        verts.append(ok)
    return edges, verts


def _seg_dist(p, a, b):
    lo, hi = (a, b) if a <= b else (b, a)
    if p < lo:
        return lo - p
    if p > hi:
        return p - hi
    return 0


def critical_values(P: TimeSeries, Q: TimeSeries) -> list:
    """Every value at which the free-space combinatorics can change (1D Alt-Godau)."""
    out = {abs(P[0] - Q[0]), abs(P[-1] - Q[-1])}
    for A, Bc in ((P, Q), (Q, P)):
        for p in A:
            for j in range(len(Bc) - 1):
                out.add(_seg_dist(p, Bc[j], Bc[j + 1]))
        for k in range(len(A)):
            for l in range(k + 1, len(A)):
                mid = (A[k] + A[l]) / 2
                for j in range(len(Bc) - 1):
                    if _seg_dist(mid, Bc[j], Bc[j + 1]) == 0:
                        out.add(abs(A[k] - A[l]) / 2)
                        break
    return sorted(out)


def _min_accepted(cands, accept):
    lo, hi = 0, len(cands) - 1
    if not accept(cands[hi]):
        raise RuntimeError("largest candidate rejected; candidate set incomplete")
    while lo < hi:
        mid = (lo + hi) // 2
        if accept(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


def freespace_distance(P: TimeSeries, Q: TimeSeries):
    """Exact ``d_F(P, Q)``: smallest critical value accepted by :func:`freespace_decide`."""
    return _min_accepted(critical_values(P, Q), lambda d: freespace_decide(P, Q, d))


def _probe_points(bounds, lower=None):
    pts = sorted(set(bounds))
    if not pts:
        return [lower if lower is not None else 0]
    out = list(pts)
    out.extend((a + b) / 2 for a, b in zip(pts, pts[1:]))
    out.append(pts[-1] + 1)
    if lower is None:
        out.append(pts[0] - 1)
    return sorted(x for x in set(out) if lower is None or x >= lower)


def translation_candidates(P: TimeSeries, Q: TimeSeries, delta) -> list:
    bounds = []
    for p in P:
        for q in Q:
            bounds.extend((p - q - delta, p - q + delta))
    return _probe_points(bounds)


def brute_translation(P: TimeSeries, Q: TimeSeries, delta):
    """``(decision, witness)`` for ``min_t d_F(P, Q + t) <= delta`` by exhaustive probing."""
    for t in translation_candidates(P, Q, delta):
        if freespace_decide(P, Q.translate(t), delta):
            return True, t
    return False, None


def brute_translation_value(P: TimeSeries, Q: TimeSeries):
    aligned = [p - q for p in P for q in Q]
    cands = sorted({abs(a - b) / 2 for a in aligned for b in aligned})
    return _min_accepted(cands, lambda d: brute_translation(P, Q, d)[0])


def scaling_candidates(P: TimeSeries, Q: TimeSeries, delta) -> list:
    bounds = [to_scalar(0)]
    for p in P:
        for q in Q:
            if q != 0:
                bounds.extend(((p - delta) / q, (p + delta) / q))
    if delta > 0:
        for a in Q:
            for b in Q:
                if a != b:
                    bounds.append(delta / (abs(a - b) / 2))
    return _probe_points([b for b in bounds if b >= 0], lower=0)


def brute_scaling(P: TimeSeries, Q: TimeSeries, delta):
    """``(decision, witness)`` for ``min_{s >= 0} d_F(P, sQ) <= delta``."""
    for s in scaling_candidates(P, Q, delta):
        if freespace_decide(P, Q.scale(s), delta):
            return True, s
    return False, None


def _scaling_value_candidates(P: TimeSeries, Q: TimeSeries) -> list:
    # boundary functions of delta: (p + sigma * delta) / q, delta / c, and 0
    lines = [(p / q, sig / q) for p in P for q in Q if q != 0 for sig in (-1, 1)]
    lines += [(to_scalar(0), 1 / (abs(a - b) / 2)) for a in Q for b in Q if a != b]
    lines.append((to_scalar(0), to_scalar(0)))
    lines = list(set(lines))
    out = {to_scalar(0)}
    for x in range(len(lines)):
        a0, a1 = lines[x]
        for y in range(x + 1, len(lines)):
            b0, b1 = lines[y]
            if a1 != b1:
                d = (b0 - a0) / (a1 - b1)
                if d >= 0:
                    out.add(d)
    out.update(abs(p) for p in P)
    out.update(abs(a - b) / 2 for a in P for b in P)
    return sorted(out)


def brute_scaling_value(P: TimeSeries, Q: TimeSeries):
    return _min_accepted(_scaling_value_candidates(P, Q), lambda d: brute_scaling(P, Q, d)[0])


def brute_min_matcher(P: TimeSeries, Q: TimeSeries, delta) -> Optional[int]:
    """Smallest vertex ``w`` of Q with ``|P[-1] - Q[w]| <= delta`` such that some
    ``w* in [w, min(w + 1, m - 1)]`` has ``d_F(P, Q[0, w*]) <= delta``.
    """
    m = len(Q)
    edges, verts = freespace_end_reachable(P, Q, delta)
    for w in range(m):
        if abs(P[-1] - Q[w]) > delta:
            continue
        if verts[w] or (w < m - 1 and edges[w] is not None):
            return w
    return None


def random_series(rng: random.Random, n: int, lo: int = -8, hi: int = 8, family: str = "uniform", delta=None):
    if family == "uniform":
        return [rng.randint(lo, hi) for _ in range(n)]
    if family == "near-ties":
        base = [rng.randint(lo, hi) for _ in range(max(1, n // 3))]
        return [rng.choice(base) + rng.choice((0, 0, 1, -1)) for _ in range(n)]
    if family == "flat":
        out = [rng.randint(lo, hi)]
        while len(out) < n:
            out.append(out[-1] if rng.random() < 0.5 else rng.randint(lo, hi))
        return out
    if family == "2delta-edge":
        width = 2 * (delta if delta is not None else 1)
        out = [to_scalar(rng.randint(lo, hi))]
        while len(out) < n:
            step = width + rng.choice((-1, 0, 0, 1))
            out.append(out[-1] + step * rng.choice((-1, 1)))
        return out
    raise ValueError(f"unknown family {family!r}")


def random_instance(seed, n_range=(2, 12), value_range=(-8, 8), family: str = "uniform", delta_step=2):
    """Deterministic ``(P, Q, delta)`` with integer-valued vertices.

    ``delta`` is drawn from ``{0, 1/delta_step, ..., value span}``.
    """
    rng = random.Random(seed)
    lo, hi = value_range
    n = rng.randint(*n_range)
    m = rng.randint(*n_range)
    delta = to_scalar(rng.randint(0, (hi - lo) * delta_step // 2)) / delta_step
    P = TimeSeries(random_series(rng, n, lo, hi, family, delta))
    Q = TimeSeries(random_series(rng, m, lo, hi, family, delta))
    return P, Q, delta
