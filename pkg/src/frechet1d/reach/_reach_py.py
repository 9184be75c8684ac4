"""Pure-Python grid reachability kernel (fallback for the compiled one)."""

from __future__ import annotations


class ReachGrid:
    """Monotone reachability on a boolean grid with lazy row recomputation.

    Steps go right, up (next row) and diagonally.  After cell edits only the
    rows from the lowest edited one are recomputed, and the pass stops as soon
    as a recomputed row matches its previous value past the last edited row.
    ``ops`` counts cells visited by the dynamic program.
    """

    def __init__(self, rows: int, cols: int, bits=None):
        if rows < 1 or cols < 1:
            raise ValueError("grid must be non-empty")
        self.rows, self.cols = rows, cols
        self._bits = bytearray(rows * cols)
        if bits is not None:
            for r, row in enumerate(bits):
                for c, v in enumerate(row):
                    if v:
                        self._bits[r * cols + c] = 1
        self._reach = bytearray(rows * cols)
        self._lo, self._hi = 0, rows - 1
        self.ops = 0

    def _check(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"cell ({r}, {c}) outside {self.rows}x{self.cols} grid")
        return r * self.cols + c

    def get(self, r: int, c: int) -> int:
        return self._bits[self._check(r, c)]

    def set(self, r: int, c: int, value) -> bool:
        k = self._check(r, c)
        v = 1 if value else 0
        if self._bits[k] == v:
            return False
        self._bits[k] = v
        if self._lo > self._hi:
            self._lo = self._hi = r
        else:
            self._lo, self._hi = min(self._lo, r), max(self._hi, r)
        return True

    def reachable(self) -> bool:
        cols, bits, reach = self.cols, self._bits, self._reach
        if self._lo <= self._hi:
            for r in range(self._lo, self.rows):
                base = r * cols
                changed = False
                left = 0
                for c in range(cols):
                    k = base + c
                    if not bits[k]:
                        v = 0
                    elif r == 0:
                        v = 1 if c == 0 or left else 0
                    else:
                        up = base - cols + c
                        v = 1 if left or reach[up] or (c and reach[up - 1]) else 0
                    if reach[k] != v:
                        reach[k] = v
                        changed = True
                    left = v
                self.ops += cols
                if not changed and r >= self._hi:
                    break
            self._lo, self._hi = 1, 0
        return bool(reach[self.rows * cols - 1])
