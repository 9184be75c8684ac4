"""Scalars, intervals and the time-series value type.

Exact mode stores every vertex as a ``gmpy2.mpq`` rational so all
comparisons are decided without rounding.  Float mode stores plain floats;
the tolerance is applied by callers through :func:`inflate`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from gmpy2 import mpq

__all__ = [
    "Interval",
    "TimeSeries",
    "Scalar",
    "to_scalar",
    "parse_scalar",
    "render",
    "inflate",
]

Scalar = Union[int, float, Fraction, "mpq"]

_MPQ = type(mpq(0))


def parse_scalar(text: str) -> mpq:
    """Parse a decimal (``"1.5"``, ``"-2e-3"``) or ratio (``"3/4"``) string exactly."""
    token = text.strip()
    if not token:
        raise ValueError("empty numeric token")
    try:
        return mpq(token)
    except ValueError:
        raise ValueError(f"not a number: {text!r}") from None


def to_scalar(value) -> mpq:
    """Convert ``value`` to an exact rational.

    Strings go through :func:`parse_scalar`; floats are converted to the
    exact binary rational they denote.
    """
    if isinstance(value, _MPQ):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Rational):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return mpq(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a scalar")


def render(value) -> str:
    """Canonical text form: ``"p/q"`` reduced, or an integer, or a float repr."""
    if isinstance(value, float):
        return repr(value)
    q = to_scalar(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def inflate(delta, tol):
    """Threshold used by float mode: ``|a - b| <= delta`` becomes ``<= delta + tol``."""
    return delta + tol if tol else delta


class Interval(NamedTuple):
    lo: Scalar
    hi: Scalar

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def widen(self, r) -> "Interval":
        return Interval(self.lo - r, self.hi + r)


def _running(values: Sequence, fn) -> tuple:
    out = []
    cur = None
    for v in values:
        cur = v if cur is None else fn(cur, v)
        out.append(cur)
    return tuple(out)


class TimeSeries:
    """A 1D polygonal curve given by its vertices.

    Vertices are indexed from 0.  Running extrema are precomputed so that
    ``prefix_image(j)`` (the image of the curve restricted to vertices
    ``0..j``) and ``suffix_image(j)`` (vertices ``j..n-1``) are O(1).

    Parameters
    ----------
    values : iterable
        Vertex values.  Non-float values are converted to exact rationals;
        if every value is a float the series stays in float mode.
    allow_single : bool
        Permit a one-vertex series.  Only the prefix/suffix machinery
        needs this; user input must have at least two vertices.
    """

    __slots__ = ("values", "prefix_min", "prefix_max", "suffix_min", "suffix_max")

    def __init__(self, values: Iterable, *, allow_single: bool = False):
        vals = list(values)
        if vals and all(isinstance(v, float) for v in vals):
            for v in vals:
                if not math.isfinite(v):
                    raise ValueError(f"non-finite vertex {v!r}")
        else:
            vals = [to_scalar(v) for v in vals]
        if len(vals) < (1 if allow_single else 2):
            raise ValueError(
                f"a time series needs at least {1 if allow_single else 2} vertices, got {len(vals)}"
            )
        self.values = tuple(vals)
        self.prefix_min = _running(vals, min)
        self.prefix_max = _running(vals, max)
        self.suffix_min = _running(vals[::-1], min)[::-1]
        self.suffix_max = _running(vals[::-1], max)[::-1]

    @property
    def is_float(self) -> bool:
        return isinstance(self.values[0], float)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self) -> Iterator:
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "TimeSeries([" + ", ".join(render(v) for v in self.values) + "])"

    def _check(self, j: int) -> None:
        if not 0 <= j < len(self.values):
            raise IndexError(f"vertex index {j} out of range for {len(self.values)} vertices")

    def subseries(self, s: int, t: int, *, allow_single: bool = False) -> "TimeSeries":
        """Vertices ``s..t`` inclusive."""
        self._check(s)
        self._check(t)
        if s > t or (s == t and not allow_single):
            raise IndexError(f"invalid subseries range [{s}, {t}]")
        return TimeSeries(self.values[s : t + 1], allow_single=allow_single)

    def reverse(self) -> "TimeSeries":
        return TimeSeries(self.values[::-1], allow_single=True)

    def translate(self, t) -> "TimeSeries":
        return TimeSeries([v + t for v in self.values], allow_single=True)

    def scale(self, s) -> "TimeSeries":
        if s < 0:
            raise ValueError(f"scale factor must be nonnegative, got {s}")
        return TimeSeries([s * v for v in self.values], allow_single=True)

    def prefix_image(self, j: int) -> Interval:
        self._check(j)
        return Interval(self.prefix_min[j], self.prefix_max[j])

    def suffix_image(self, j: int) -> Interval:
        self._check(j)
        return Interval(self.suffix_min[j], self.suffix_max[j])

    def image(self) -> Interval:
        return Interval(self.prefix_min[-1], self.prefix_max[-1])
