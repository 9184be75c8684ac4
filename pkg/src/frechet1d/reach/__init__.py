"""Offline dynamic grid reachability.

A backend receives an initial boolean grid and the complete list of cell
updates up front, and answers, for every update prefix, whether the last cell
is reachable from ``(0, 0)`` by right, up and diagonal steps through active
cells.  Cells are 0-based ``(row, col)``.

The grid kernel is compiled when the extension is available; setting
``FRECHET1D_PURE=1`` forces the pure-Python kernel.
"""

from __future__ import annotations

import os
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence

from ._reach_py import ReachGrid as PyReachGrid

__all__ = [
    "GridUpdate",
    "ReachabilityBackend",
    "BaselineBackend",
    "ReachGrid",
    "PyReachGrid",
    "KERNEL",
    "offline_reachability",
    "register_backend",
    "get_backend",
    "available_backends",
]

if os.environ.get("FRECHET1D_PURE") == "1":
    ReachGrid, KERNEL = PyReachGrid, "python"
else:
    try:
        from ._reach_ext import ReachGrid  # type: ignore[no-redef]

        KERNEL = "cython"
    except ImportError:
        ReachGrid, KERNEL = PyReachGrid, "python"


class GridUpdate(NamedTuple):
    kind: str  # "activate" | "deactivate"
    cell: tuple

    @property
    def value(self) -> int:
        if self.kind == "activate":
            return 1
        if self.kind == "deactivate":
            return 0
        raise ValueError(f"unknown update kind {self.kind!r}")


class ReachabilityBackend:
    """Contract shared by all backends.

    Subclasses implement :meth:`answers`; ``answers()[l]`` is the reachability
    after the first ``l`` updates, ``l = 0..U``.  ``prefixes`` restricts the
    work to the listed prefixes (entries for the others are ``None``).
    """

    name = "abstract"

    def __init__(self, initial: Sequence[Sequence], updates: Iterable[GridUpdate]):
        self.initial = initial
        self.updates = list(updates)
        rows = len(initial)
        cols = len(initial[0]) if rows else 0
        if rows == 0 or cols == 0:
            raise ValueError("grid must be non-empty")
        for u in self.updates:
            r, c = u.cell
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"update cell {u.cell} outside {rows}x{cols} grid")
        self.shape = (rows, cols)
        self.ops = 0

    def answers(self, prefixes: Optional[Iterable[int]] = None) -> List[Optional[bool]]:
        raise NotImplementedError


class BaselineBackend(ReachabilityBackend):
    """Re-runs the reachability program after each queried prefix.

    The rerun starts at the lowest row edited since the previous query and
    stops once rows stop changing, so its cost tracks the edits rather than
    the grid size.
    """

    name = "baseline"

    def __init__(self, initial, updates, kernel=None):
        super().__init__(initial, updates)
        self._kernel = kernel or ReachGrid

    def answers(self, prefixes=None):
        U = len(self.updates)
        wanted = set(range(U + 1)) if prefixes is None else set(prefixes)
        out: List[Optional[bool]] = [None] * (U + 1)
        grid = self._kernel(*self.shape, self.initial)
        if 0 in wanted:
            out[0] = grid.reachable()
        for l, u in enumerate(self.updates, start=1):
            grid.set(*u.cell, u.value)
            if l in wanted:
                out[l] = grid.reachable()
        self.ops = grid.ops
        return out


_REGISTRY: Dict[str, Callable[..., ReachabilityBackend]] = {}


def register_backend(name: str, factory: Callable[..., ReachabilityBackend]) -> None:
    _REGISTRY[name] = factory


def get_backend(name: str) -> Callable[..., ReachabilityBackend]:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown backend {name!r}; available: {sorted(_REGISTRY)}") from None


def available_backends() -> List[str]:
    return sorted(_REGISTRY)


register_backend("baseline", BaselineBackend)


def offline_reachability(initial, updates, backend: str = "baseline") -> List[bool]:
    """Reachability after every update prefix, including the empty one."""
    return get_backend(backend)(initial, updates).answers()
