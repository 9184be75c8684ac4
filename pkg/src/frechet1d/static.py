"""Modified free-space matrix, the static decider and the exact static distance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .boundary import boundaries, decide_boundary_frechet, minimal_matcher, suffix_matcher
from .core import TimeSeries, inflate
from .grid import GridContext, Landmarks, build_frame, cell_tags, landmarks_from_relation, value_relation
from .signature import ExtendedSignature, compute_extended_signature

__all__ = [
    "Landmarks",
    "ModifiedFreeSpaceMatrix",
    "compute_landmarks",
    "grid_context",
    "build_modified_matrix",
    "reachable",
    "decide_static",
    "static_candidates",
    "exact_distance",
]


def compute_landmarks(P: TimeSeries, Q: TimeSeries, delta, SP: ExtendedSignature, SQ: ExtendedSignature) -> Landmarks:
    """Landmarks straight from the boundary series, without the sign matrix."""
    (pp, ps), (qp, qs) = boundaries(P, SP), boundaries(Q, SQ)
    return Landmarks(
        i2=SP.indices[1],
        j2=SQ.indices[1],
        ipen=SP.indices[-2],
        jpen=SQ.indices[-2],
        pre_ok=decide_boundary_frechet(pp, qp, delta),
        suf_ok=decide_boundary_frechet(ps, qs, delta),
        w_pre=minimal_matcher(pp, Q, SQ.indices[1], delta),
        v_pre=minimal_matcher(qp, P, SP.indices[1], delta),
        w_suf=suffix_matcher(ps, Q, SQ.indices[-2], delta),
        v_suf=suffix_matcher(qs, P, SP.indices[-2], delta),
    )


@dataclass
class ModifiedFreeSpaceMatrix:
    """Free-space grid over vertices and edges of both curves.

    ``bits`` has ``2n - 1`` rows and ``2m - 1`` columns; :meth:`entry` reads
    the vertex-vertex cell ``(i, j)``.
    """

    bits: List[bytearray]
    provenance: List[List[str]]
    landmarks: Landmarks
    sig_p: ExtendedSignature
    sig_q: ExtendedSignature

    @property
    def shape(self):
        return len(self.bits), len(self.bits[0])

    def entry(self, i: int, j: int) -> int:
        return self.bits[2 * i][2 * j]

    def __getitem__(self, rc) -> int:
        r, c = rc
        return self.bits[r][c]


def grid_context(P: TimeSeries, Q: TimeSeries, delta):
    """``(ctx, SP, SQ)`` for the static instance."""
    SP, SQ = compute_extended_signature(P, delta), compute_extended_signature(Q, delta)
    frame = build_frame(P, Q, delta, SP, SQ)
    table = value_relation(P, Q, delta)

    def rel(i, j):
        return table[i][j]

    return GridContext(frame, rel, landmarks_from_relation(rel, frame)), SP, SQ


def build_modified_matrix(P: TimeSeries, Q: TimeSeries, delta) -> ModifiedFreeSpaceMatrix:
    ctx, SP, SQ = grid_context(P, Q, delta)
    rows, cols = 2 * len(P) - 1, 2 * len(Q) - 1
    prov = [[cell_tags(r, c, ctx) for c in range(cols)] for r in range(rows)]
    bits = [bytearray(1 if t else 0 for t in row) for row in prov]
    return ModifiedFreeSpaceMatrix(bits, prov, ctx.lm, SP, SQ)


def reachable(M) -> bool:
    """Is the last cell reachable from ``(0, 0)`` by right, up and diagonal steps?"""
    bits: Sequence = M.bits if isinstance(M, ModifiedFreeSpaceMatrix) else M
    n, m = len(bits), len(bits[0])
    prev = [False] * m
    for i in range(n):
        row = bits[i]
        cur = [False] * m
        for j in range(m):
            if not row[j]:
                continue
            if i == 0 and j == 0:
                cur[j] = True
            else:
                cur[j] = (j > 0 and (cur[j - 1] or prev[j - 1])) or prev[j]
        prev = cur
    return prev[m - 1]


def decide_static(P: TimeSeries, Q: TimeSeries, delta, *, tol=0) -> bool:
    """``d_F(P, Q) <= delta``.  Float inputs compare against ``delta + tol``."""
    return reachable(build_modified_matrix(P, Q, inflate(delta, tol)))


def static_candidates(P: TimeSeries, Q: TimeSeries) -> list:
    """Every value at which ``d_F(P, Q) <= delta`` can switch.

    Vertex-vertex distances alone are not enough: a back-and-forth of one
    curve may have to be matched to a single point of the other, which costs
    half its height.  Half-differences within each curve cover that case.
    """
    out = {abs(p - q) for p in P for q in Q}
    for T in (P, Q):
        out.update(abs(a - b) / 2 for a in T for b in T)
    return sorted(out)


def exact_distance(P: TimeSeries, Q: TimeSeries, *, tol=0):
    """Exact ``d_F(P, Q)`` by bisection over :func:`static_candidates`.

    With ``tol`` (float mode) each probe accepts ``delta + tol``.
    """
    cands = static_candidates(P, Q)
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if decide_static(P, Q, cands[mid], tol=tol):
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]
