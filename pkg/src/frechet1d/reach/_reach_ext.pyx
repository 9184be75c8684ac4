# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled grid reachability kernel; same interface as ``_reach_py.ReachGrid``."""

from libc.stdlib cimport calloc, free


cdef class ReachGrid:
    cdef readonly int rows, cols
    cdef unsigned char* _bits
    cdef unsigned char* _reach
    cdef int _lo, _hi
    cdef public long long ops

    def __cinit__(self, int rows, int cols, bits=None):
        if rows < 1 or cols < 1:
            raise ValueError("grid must be non-empty")
        self.rows, self.cols = rows, cols
        self._bits = <unsigned char*> calloc(rows * cols, 1)
        self._reach = <unsigned char*> calloc(rows * cols, 1)
        if self._bits == NULL or self._reach == NULL:
            raise MemoryError()
        self._lo, self._hi = 0, rows - 1
        self.ops = 0
        if bits is not None:
            for r, row in enumerate(bits):
                for c, v in enumerate(row):
                    if v:
                        self._bits[r * cols + c] = 1

    def __dealloc__(self):
        free(self._bits)
        free(self._reach)

    cdef inline int _index(self, int r, int c) except -1:
        if r < 0 or r >= self.rows or c < 0 or c >= self.cols:
            raise IndexError(f"cell ({r}, {c}) outside {self.rows}x{self.cols} grid")
        return r * self.cols + c

    def get(self, int r, int c):
        return self._bits[self._index(r, c)]

    def set(self, int r, int c, value):
        cdef int k = self._index(r, c)
        cdef unsigned char v = 1 if value else 0
        if self._bits[k] == v:
            return False
        self._bits[k] = v
        if self._lo > self._hi:
            self._lo = self._hi = r
        else:
            if r < self._lo:
                self._lo = r
            if r > self._hi:
                self._hi = r
        return True

    def reachable(self):
        cdef int r, c, k, up, base
        cdef int cols = self.cols
        cdef unsigned char v, left, changed
        if self._lo <= self._hi:
            for r in range(self._lo, self.rows):
                base = r * cols
                changed = 0
                left = 0
                for c in range(cols):
                    k = base + c
                    if not self._bits[k]:
                        v = 0
                    elif r == 0:
                        v = 1 if (c == 0 or left) else 0
                    else:
                        up = base - cols + c
                        v = 1 if (left or self._reach[up] or (c > 0 and self._reach[up - 1])) else 0
                    if self._reach[k] != v:
                        self._reach[k] = v
                        changed = 1
                    left = v
                self.ops += cols
                if not changed and r >= self._hi:
                    break
            self._lo, self._hi = 1, 0
        return bool(self._reach[self.rows * cols - 1])
