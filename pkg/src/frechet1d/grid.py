"""The modified free-space grid as a function of the sign matrix.

Every cell of the grid depends on the two curves only through

* the signature structure (which vertices are signature vertices, the
  corner indices and the boundary extreme point sequences), and
* the sign matrix ``rel[i][j]`` in ``{-1, 0, +1}``: ``0`` when
  ``|P(i) - Q(j)| <= delta``, otherwise the sign of ``P(i) - Q(j)``.

Translating ``Q`` or scaling it by ``s > 0`` leaves the first part unchanged
(between signature breakpoints), so a sweep only has to maintain ``rel``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .boundary import extreme_point_sequence, has_deadlock
from .core import TimeSeries
from .signature import ExtendedSignature

__all__ = [
    "Landmarks",
    "Side",
    "Frame",
    "build_frame",
    "value_relation",
    "assignments",
    "side_landmarks",
    "landmarks_from_relation",
    "GridContext",
    "cell_tags",
    "grid_bits",
]

INF = math.inf
Rel = Callable[[int, int], int]


def value_relation(P: TimeSeries, Q: TimeSeries, delta) -> List[List[int]]:
    """The sign matrix of ``(P, Q)`` at ``delta``."""
    out = []
    for p in P:
        row = []
        for q in Q:
            d = p - q
            row.append(0 if abs(d) <= delta else (1 if d > 0 else -1))
        out.append(row)
    return out


@dataclass(frozen=True)
class Landmarks:
    """Corner indices, boundary decisions and minimal matchers (``None`` = no matcher)."""

    i2: int
    j2: int
    ipen: int
    jpen: int
    pre_ok: bool
    suf_ok: bool
    w_pre: Optional[int]
    v_pre: Optional[int]
    w_suf: Optional[int]
    v_suf: Optional[int]

    def special_cells(self):
        out = []
        if self.w_pre is not None:
            out.append((self.i2, self.w_pre))
        if self.v_pre is not None:
            out.append((self.v_pre, self.j2))
        if self.w_suf is not None:
            out.append((self.ipen, self.w_suf))
        if self.v_suf is not None:
            out.append((self.v_suf, self.jpen))
        return out


def _arg_tables(T: TimeSeries, order: Sequence[int]):
    # running argmin / argmax over T[order[0..c]], as original indices
    lo, hi = [], []
    for c, k in enumerate(order):
        if c == 0 or T[k] < T[lo[-1]]:
            lo.append(k)
        else:
            lo.append(lo[-1])
        if c == 0 or T[k] > T[hi[-1]]:
            hi.append(k)
        else:
            hi.append(hi[-1])
    return tuple(lo), tuple(hi)


@dataclass(frozen=True)
class Side:
    """One boundary pair (prefix or reversed suffix) in original indices.

    ``p_order`` walks ``P`` from its start vertex to the corner vertex
    (``i2`` or ``ipen``); ``q_order`` does the same for ``Q``.
    """

    p_order: Tuple[int, ...]
    q_order: Tuple[int, ...]
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    p_lo: Tuple[int, ...]
    p_hi: Tuple[int, ...]
    q_lo: Tuple[int, ...]
    q_hi: Tuple[int, ...]

    @property
    def p_corner(self) -> int:
        return self.p_order[-1]

    @property
    def q_corner(self) -> int:
        return self.q_order[-1]


def _side(P: TimeSeries, Q: TimeSeries, p_order, q_order) -> Side:
    Pb = TimeSeries([P[k] for k in p_order]) if len(p_order) > 1 else None
    Qb = TimeSeries([Q[k] for k in q_order]) if len(q_order) > 1 else None
    a = tuple(p_order[k] for k in extreme_point_sequence(Pb)) if Pb else (p_order[0],)
    b = tuple(q_order[k] for k in extreme_point_sequence(Qb)) if Qb else (q_order[0],)
    p_lo, p_hi = _arg_tables(P, p_order)
    q_lo, q_hi = _arg_tables(Q, q_order)
    return Side(tuple(p_order), tuple(q_order), a, b, p_lo, p_hi, q_lo, q_hi)


@dataclass(frozen=True)
class Frame:
    """Everything about the grid that only depends on the two signatures."""

    n: int
    m: int
    in_p: Tuple[bool, ...]
    in_q: Tuple[bool, ...]
    i2: int
    j2: int
    ipen: int
    jpen: int
    band_p: bool
    band_q: bool
    pre: Side
    suf: Side


def _is_band(T: TimeSeries, a: int, b: int, delta) -> bool:
    # one point can serve both middle signature vertices
    return a != b and abs(T[a] - T[b]) <= 2 * delta


def build_frame(P: TimeSeries, Q: TimeSeries, delta, SP: ExtendedSignature, SQ: ExtendedSignature, *, band_q=None) -> Frame:
    """``band_q`` overrides the band test for ``Q`` (scaling sweeps pass it)."""
    n, m = len(P), len(Q)
    i2, ipen = SP.indices[1], SP.indices[-2]
    j2, jpen = SQ.indices[1], SQ.indices[-2]
    four_p, four_q = len(SP) == 4, len(SQ) == 4
    if band_q is None:
        band_q = four_q and _is_band(Q, j2, jpen, delta)
    pre = _side(P, Q, range(0, i2 + 1), range(0, j2 + 1))
    suf = _side(P, Q, range(n - 1, ipen - 1, -1), range(m - 1, jpen - 1, -1))
    return Frame(
        n, m, tuple(SP.membership(n)), tuple(SQ.membership(m)),
        i2, j2, ipen, jpen, four_p and _is_band(P, i2, ipen, delta), bool(band_q), pre, suf,
    )


def assignments(rel: Rel, side: Side):
    """Preliminary assignments ``(X, Y)`` of a boundary pair, read off ``rel``."""
    X = [next((l for l, bl in enumerate(side.b) if rel(ak, bl) == 0), INF) for ak in side.a]
    Y = [next((k for k, ak in enumerate(side.a) if rel(ak, bl) == 0), INF) for bl in side.b]
    return X, Y


def _first_covered(covered, last: int) -> Optional[int]:
    if not covered(last):
        return None
    lo, hi = 0, last
    while lo < hi:
        mid = (lo + hi) // 2
        if covered(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def side_landmarks(rel: Rel, side: Side, deadlock: bool, x_inf: bool, y_inf: bool):
    """``(ok, w, v)`` for one boundary pair.

    ``ok`` decides the boundary pair itself; ``w`` is the minimal matcher of
    the ``P`` boundary on ``Q`` (an original ``Q`` index), ``v`` the one of the
    ``Q`` boundary on ``P``.  ``deadlock`` and the two infinity flags come from
    the preliminary assignments.
    """
    pc, qc = side.p_corner, side.q_corner
    plo, phi = side.p_lo[-1], side.p_hi[-1]
    qlo, qhi = side.q_lo[-1], side.q_hi[-1]
    ok = (
        not deadlock
        and rel(side.p_order[0], side.q_order[0]) == 0
        and rel(pc, qc) == 0
        and rel(plo, qlo) == 0
        and rel(phi, qhi) == 0
    )
    w = v = None
    if not deadlock and not x_inf:
        jl = len(side.q_order) - 1

        def covered_q(c):
            c = min(c + 1, jl)
            return rel(plo, side.q_lo[c]) != -1 and rel(phi, side.q_hi[c]) != 1

        start = _first_covered(covered_q, jl)
        if start is not None:
            w = next((side.q_order[k] for k in range(start, jl + 1) if rel(pc, side.q_order[k]) == 0), None)
    if not deadlock and not y_inf:
        il = len(side.p_order) - 1

        def covered_p(c):
            c = min(c + 1, il)
            return rel(side.p_lo[c], qlo) != 1 and rel(side.p_hi[c], qhi) != -1

        start = _first_covered(covered_p, il)
        if start is not None:
            v = next((side.p_order[k] for k in range(start, il + 1) if rel(side.p_order[k], qc) == 0), None)
    return ok, w, v


def _scratch(rel: Rel, side: Side):
    X, Y = assignments(rel, side)
    return side_landmarks(rel, side, has_deadlock(X, Y)[0], INF in X, INF in Y)


def landmarks_from_relation(rel: Rel, frame: Frame) -> Landmarks:
    pre_ok, w_pre, v_pre = _scratch(rel, frame.pre)
    suf_ok, w_suf, v_suf = _scratch(rel, frame.suf)
    return Landmarks(frame.i2, frame.j2, frame.ipen, frame.jpen, pre_ok, suf_ok, w_pre, v_pre, w_suf, v_suf)


class GridContext:
    """A frame, a sign matrix and the landmarks derived from them."""

    __slots__ = ("frame", "rel", "lm", "n", "m", "in_p", "in_q")

    def __init__(self, frame: Frame, rel: Rel, lm: Landmarks):
        self.frame, self.rel, self.lm = frame, rel, lm
        self.n, self.m = frame.n, frame.m
        self.in_p, self.in_q = frame.in_p, frame.in_q

    def close(self, i: int, j: int) -> bool:
        return self.rel(i, j) == 0

    def _meets(self, i0, j0, i1, j1) -> bool:
        # a segment meets the closed delta-interval unless both ends lie strictly on one side
        a = self.rel(i0, j0)
        return a == 0 or a != self.rel(i1, j1)

    def p_edge_hits(self, x: int) -> bool:
        """Edge ``P(x) -> P(x+1)`` meets the common window of ``Q(j2)`` and ``Q(jpen)``."""
        f = self.frame
        return all(self._meets(x, j, x + 1, j) for j in (f.j2, f.jpen))

    def q_edge_hits(self, y: int) -> bool:
        f = self.frame
        return all(self._meets(i, y, i, y + 1) for i in (f.i2, f.ipen))


def _block_cell(a: int, b: int, ai: int, bj: int, w, v, corner_ok: bool, close) -> bool:
    # A corner block in local coordinates: (0, 0) is the start, (ai, bj) the
    # far corner, w / v the matcher cells on the far row / far column.  A
    # thin block (ai or bj zero) is a single line entered only via (0, 0).
    if (a, b) == (0, 0):
        return close
    if a < ai and b < bj:
        return True
    if (a, b) == (ai, bj):
        return close and corner_ok
    if a == ai:
        return ai == 0 or b == w
    return bj == 0 or a == v


def cell_tags(r: int, c: int, ctx: GridContext) -> str:
    """Letters of every rule that activates grid cell ``(r, c)``; empty means 0.

    Even coordinates are vertices, odd ones are edges: row ``2i`` is ``P[i]``
    and row ``2i + 1`` the edge ``P[i] -> P[i+1]`` (columns likewise for Q).
    """
    lm, f = ctx.lm, ctx.frame
    vertex = r % 2 == 0 and c % 2 == 0
    i, j = r // 2, c // 2
    R, C = 2 * ctx.n - 2, 2 * ctx.m - 2
    if r <= 2 * f.i2 and c <= 2 * f.j2:
        ok = _block_cell(
            r, c, 2 * f.i2, 2 * f.j2,
            None if lm.w_pre is None else 2 * lm.w_pre,
            None if lm.v_pre is None else 2 * lm.v_pre,
            lm.pre_ok or lm.w_pre is not None or lm.v_pre is not None,
            vertex and ctx.close(i, j),
        )
        return ("c" if (r, c) == (0, 0) else "d") if ok else ""
    if r >= 2 * f.ipen and c >= 2 * f.jpen:
        ok = _block_cell(
            R - r, C - c, R - 2 * f.ipen, C - 2 * f.jpen,
            None if lm.w_suf is None else C - 2 * lm.w_suf,
            None if lm.v_suf is None else R - 2 * lm.v_suf,
            lm.suf_ok or lm.w_suf is not None or lm.v_suf is not None,
            vertex and ctx.close(i, j),
        )
        return ("c" if (r, c) == (R, C) else "e") if ok else ""
    sig_row = r % 2 == 0 and ctx.in_p[i]
    sig_col = c % 2 == 0 and ctx.in_q[j]
    tags = "" if sig_row or sig_col else "a"
    if vertex and ctx.close(i, j):
        tags += "b"
    if sig_col and r % 2 and f.band_q and j in (f.j2, f.jpen) and ctx.p_edge_hits(i):
        tags += "h"
    if sig_row and c % 2 and f.band_p and i in (f.i2, f.ipen) and ctx.q_edge_hits(j):
        tags += "h"
    return tags


def grid_bits(ctx: GridContext) -> List[bytearray]:
    rows, cols = 2 * ctx.n - 1, 2 * ctx.m - 1
    return [bytearray(1 if cell_tags(r, c, ctx) else 0 for c in range(cols)) for r in range(rows)]
