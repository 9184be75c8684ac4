"""Event sweep shared by the translation and scaling deciders.

The sweep walks a parameter (a translation ``t`` or a scale ``s``) across the
arrangement of closeness-interval boundaries.  Each event flips one entry of
the sign matrix; the engine updates the deadlock trackers and landmarks,
re-evaluates the handful of grid cells that can depend on that entry, and
appends the cells that changed to an offline update list for a reachability
backend.  Ties are broken symbolically: at equal coordinates interval entries
come before exits, and signature breakpoints come last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .grid import Frame, GridContext, Landmarks, Side, assignments, cell_tags, grid_bits, side_landmarks
from .reach import GridUpdate, get_backend

__all__ = [
    "ENTRY",
    "EXIT",
    "BREAK",
    "Flip",
    "SweepStats",
    "DeadlockTracker",
    "SweepEngine",
    "representatives",
    "run_sweep",
]

INF = math.inf
ENTRY, EXIT, BREAK = 0, 1, 2


class Flip(NamedTuple):
    """One event: pair ``(i, j)`` takes sign ``new`` at coordinate ``at``.

    Breakpoint events use ``i = j = -1`` and carry the new frame's index in
    ``new``.
    """

    at: object
    order: int
    i: int
    j: int
    new: int

    def key(self):
        return (self.at, self.order)


@dataclass
class SweepStats:
    events: int = 0
    representatives: int = 0
    cell_updates: int = 0
    max_event_updates: int = 0
    max_break_updates: int = 0
    dp_ops: int = 0
    max_shift: int = 0
    shifts_ok: bool = True
    backend: str = ""
    extra: Dict[str, object] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "events": self.events,
            "representatives": self.representatives,
            "cell_updates": self.cell_updates,
            "backend": self.backend,
        }


class DeadlockTracker:
    """Preliminary assignments of one boundary pair, kept up to date per flip.

    ``dead`` counts pairs ``(k, l)`` with ``l < X[k]`` and ``k < Y[l]``; the
    pair is deadlocked iff it is positive.  A single flip moves ``X[k]`` and
    ``Y[l]`` by at most two positions unless one side becomes or stops being
    infinite; every finite move is recorded in ``max_shift``.
    """

    def __init__(self, side: Side, rel):
        self.side = side
        self.pos_a = {a: k for k, a in enumerate(side.a)}
        self.pos_b = {b: l for l, b in enumerate(side.b)}
        self.X, self.Y = assignments(rel, side)
        p, q = len(self.X), len(self.Y)
        self.dead = sum(1 for k in range(p) for l in range(q) if l < self.X[k] and k < self.Y[l])
        self.x_inf = sum(1 for x in self.X if x == INF)
        self.y_inf = sum(1 for y in self.Y if y == INF)
        self.max_shift = 0
        self.shifts_ok = True

    @property
    def deadlock(self) -> bool:
        return self.dead > 0

    def touches(self, i: int, j: int) -> bool:
        return i in self.pos_a and j in self.pos_b

    def _record(self, old, new) -> None:
        if old != INF and new != INF:
            d = abs(new - old)
            self.max_shift = max(self.max_shift, d)
            if d > 2:
                self.shifts_ok = False

    def update(self, rel, i: int, j: int) -> None:
        k, l = self.pos_a[i], self.pos_b[j]
        a, b = self.side.a, self.side.b
        p, q = len(a), len(b)
        close = rel(i, j) == 0
        # X[k]
        old = self.X[k]
        if close:
            new = min(old, l)
        elif old == l:
            new = next((l2 for l2 in range(l + 1, q) if rel(a[k], b[l2]) == 0), INF)
        else:
            new = old
        if new != old:
            self._record(old, new)
            lo, hi = sorted((q if old == INF else old, q if new == INF else new))
            sign = 1 if (new == INF or (old != INF and new > old)) else -1
            for l2 in range(lo, hi):
                if k < self.Y[l2]:
                    self.dead += sign
            self.x_inf += (new == INF) - (old == INF)
            self.X[k] = new
        # Y[l]
        old = self.Y[l]
        if close:
            new = min(old, k)
        elif old == k:
            new = next((k2 for k2 in range(k + 1, p) if rel(a[k2], b[l]) == 0), INF)
        else:
            new = old
        if new != old:
            self._record(old, new)
            lo, hi = sorted((p if old == INF else old, p if new == INF else new))
            sign = 1 if (new == INF or (old != INF and new > old)) else -1
            for k2 in range(lo, hi):
                if l < self.X[k2]:
                    self.dead += sign
            self.y_inf += (new == INF) - (old == INF)
            self.Y[l] = new


def _side_span(side: Side):
    return frozenset(side.p_order), frozenset(side.q_order)


class SweepEngine:
    """Maintains sign matrix, trackers, landmarks and grid along a sweep."""

    def __init__(self, frame: Frame, table: List[List[int]]):
        self.table = table
        self.rel = lambda i, j: table[i][j]
        self.updates: List[GridUpdate] = []
        self.max_event_updates = 0
        self.max_break_updates = 0
        self.trackers: Tuple[DeadlockTracker, ...] = ()
        self._install(frame)
        self.initial = grid_bits(self.ctx)
        self.bits = [bytearray(row) for row in self.initial]

    def _install(self, frame: Frame) -> None:
        self.frame = frame
        old = self.trackers
        self.trackers = (DeadlockTracker(frame.pre, self.rel), DeadlockTracker(frame.suf, self.rel))
        for t_old, t_new in zip(old, self.trackers):
            t_new.max_shift, t_new.shifts_ok = t_old.max_shift, t_old.shifts_ok
        self.spans = (_side_span(frame.pre), _side_span(frame.suf))
        self.parts = [self._side_lm(0), self._side_lm(1)]
        self.ctx = GridContext(frame, self.rel, self._landmarks())

    def _side_lm(self, s: int):
        t = self.trackers[s]
        side = self.frame.pre if s == 0 else self.frame.suf
        return side_landmarks(self.rel, side, t.deadlock, t.x_inf > 0, t.y_inf > 0)

    def _landmarks(self) -> Landmarks:
        f = self.frame
        (pre_ok, w_pre, v_pre), (suf_ok, w_suf, v_suf) = self.parts
        return Landmarks(f.i2, f.j2, f.ipen, f.jpen, pre_ok, suf_ok, w_pre, v_pre, w_suf, v_suf)

    def deadlocks(self) -> Tuple[bool, bool]:
        return self.trackers[0].deadlock, self.trackers[1].deadlock

    @property
    def max_shift(self) -> int:
        return max(t.max_shift for t in self.trackers)

    @property
    def shifts_ok(self) -> bool:
        return all(t.shifts_ok for t in self.trackers)

    def _emit(self, cells) -> int:
        count = 0
        for r, c in cells:
            v = 1 if cell_tags(r, c, self.ctx) else 0
            if self.bits[r][c] != v:
                self.bits[r][c] = v
                self.updates.append(GridUpdate("activate" if v else "deactivate", (r, c)))
                count += 1
        return count

    def _lm_cells(self, lm: Landmarks):
        f = self.frame
        out = [(2 * f.i2, 2 * f.j2), (2 * f.ipen, 2 * f.jpen)]
        out += [(2 * i, 2 * j) for i, j in lm.special_cells()]
        return out

    def flip(self, i: int, j: int, new: int) -> int:
        """Apply one sign change; returns the number of cell updates emitted."""
        if self.table[i][j] == new:
            return 0
        self.table[i][j] = new
        f = self.frame
        cells = [(2 * i, 2 * j)]
        changed = False
        for s, t in enumerate(self.trackers):
            if t.touches(i, j):
                t.update(self.rel, i, j)
            ps, qs = self.spans[s]
            if i in ps and j in qs:
                part = self._side_lm(s)
                if part != self.parts[s]:
                    self.parts[s] = part
                    changed = True
        if changed:
            old = self.ctx.lm
            lm = self._landmarks()
            self.ctx.lm = lm
            cells += self._lm_cells(old) + self._lm_cells(lm)
        if f.band_q and j in (f.j2, f.jpen):
            for x in (i - 1, i):
                if 0 <= x < f.n - 1:
                    cells += [(2 * x + 1, 2 * f.j2), (2 * x + 1, 2 * f.jpen)]
        if f.band_p and i in (f.i2, f.ipen):
            for y in (j - 1, j):
                if 0 <= y < f.m - 1:
                    cells += [(2 * f.i2, 2 * y + 1), (2 * f.ipen, 2 * y + 1)]
        n = self._emit(cells)
        self.max_event_updates = max(self.max_event_updates, n)
        return n

    def rebuild(self, frame: Frame) -> int:
        """Switch to a new signature frame; only changed cells are emitted.

        Candidates are the rows and columns whose signature status or corner
        role changed, both versions of the two corner blocks and the
        landmark cells.
        """
        old, old_lm = self.frame, self.ctx.lm
        self._install(frame)
        R, C = len(self.bits), len(self.bits[0])
        cells = set(self._lm_cells(old_lm)) | set(self._lm_cells(self.ctx.lm))
        cols = {j for j in range(frame.m) if old.in_q[j] != frame.in_q[j]}
        cols |= {old.j2, old.jpen, frame.j2, frame.jpen}
        rows = {i for i in range(frame.n) if old.in_p[i] != frame.in_p[i]}
        rows |= {old.i2, old.ipen, frame.i2, frame.ipen}
        cells.update((r, 2 * j) for j in cols for r in range(R))
        cells.update((2 * i, c) for i in rows for c in range(C))
        for f in (old, frame):
            cells.update((r, c) for r in range(2 * f.i2 + 1) for c in range(2 * f.j2 + 1))
            cells.update((r, c) for r in range(2 * f.ipen, R) for c in range(2 * f.jpen, C))
        n = self._emit(sorted(cells))
        self.max_break_updates = max(self.max_break_updates, n)
        return n


def representatives(flips: Sequence[Flip], start_value, gap) -> List[Tuple[object, int]]:
    """Realizable sweep states as ``(parameter value, number of flips applied)``.

    ``start_value`` realizes the state before the first flip; ``gap(x, y)``
    returns a value strictly between two consecutive coordinates (``y`` is
    ``None`` past the last one).  States reached only part-way through a
    coordinate's entries or exits are not realizable and are skipped.
    """
    out: List[Tuple[object, int]] = [(start_value, 0)]
    k, N = 0, len(flips)
    while k < N:
        x = flips[k].at
        while k < N and flips[k].at == x and flips[k].order == ENTRY:
            k += 1
        if k != out[-1][1]:
            out.append((x, k))
        while k < N and flips[k].at == x:
            k += 1
        if k != out[-1][1]:
            out.append((gap(x, flips[k].at if k < N else None), k))
    return out


def run_sweep(engine: SweepEngine, flips: Sequence[Flip], reps, frames=None, backend: str = "baseline", stats: Optional[SweepStats] = None, on_rep=None):
    """Feed all flips through ``engine`` and query the backend at every representative.

    ``frames[k]`` is the frame a breakpoint event with ``new == k`` installs.
    ``on_rep(index, engine)`` is called with the engine positioned at each
    representative.  Returns ``(first accepting representative index or
    None, answers)``.
    """
    stats = stats if stats is not None else SweepStats()
    marks = []
    r = 0
    while r < len(reps) and reps[r][1] == 0:
        marks.append(len(engine.updates))
        if on_rep:
            on_rep(r, engine)
        r += 1
    for k, ev in enumerate(flips, start=1):
        if ev.order == BREAK:
            engine.rebuild(frames[ev.new])
        else:
            engine.flip(ev.i, ev.j, ev.new)
        while r < len(reps) and reps[r][1] == k:
            marks.append(len(engine.updates))
            if on_rep:
                on_rep(r, engine)
            r += 1
    be = get_backend(backend)(engine.initial, engine.updates)
    answers = be.answers(set(marks))
    stats.events += len(flips)
    stats.representatives += len(reps)
    stats.cell_updates += len(engine.updates)
    stats.max_event_updates = max(stats.max_event_updates, engine.max_event_updates)
    stats.max_break_updates = max(stats.max_break_updates, engine.max_break_updates)
    stats.dp_ops += be.ops
    stats.max_shift = max(stats.max_shift, engine.max_shift)
    stats.shifts_ok = stats.shifts_ok and engine.shifts_ok
    stats.backend = be.name
    found = next((idx for idx, mk in enumerate(marks) if answers[mk]), None)
    return found, [answers[mk] for mk in marks]
