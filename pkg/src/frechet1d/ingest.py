"""Reading time series from CSV or JSON files."""

from __future__ import annotations

import json
import os
from typing import List, Optional

from .core import TimeSeries, parse_scalar

__all__ = ["InputError", "ingest", "parse_text"]


class InputError(ValueError):
    """Malformed input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


def _csv_values(text: str, source: str) -> List:
    out = []
    last = 0
    for no, raw in enumerate(text.splitlines(), start=1):
        last = no
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        token = body.rstrip(",").strip()
        try:
            out.append(parse_scalar(token))
        except ValueError:
            raise InputError(f"not a number: {token!r}", no, source) from None
    if not out:
        raise InputError("no values", max(last, 1), source)
    return out


def _json_values(text: str, source: str) -> List:
    if not text.strip():
        raise InputError("empty file", 1, source)
    try:
        data = json.loads(text, parse_float=parse_scalar, parse_int=parse_scalar)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, exc.lineno, source) from None
    except ValueError as exc:
        raise InputError(str(exc), None, source) from None
    if not isinstance(data, list):
        raise InputError("expected a flat array of numbers", 1, source)
    for k, v in enumerate(data):
        if isinstance(v, bool) or not hasattr(v, "denominator"):
            raise InputError(f"element {k} is not a number: {v!r}", 1, source)
    return data


def parse_text(text: str, fmt: str = "csv", *, source: str = "<input>", as_float: bool = False) -> TimeSeries:
    """Parse a whole file body; ``fmt`` is ``"csv"`` or ``"json"``.

    >>> parse_text("0\\n2\\n")
    TimeSeries([0, 2])
    >>> parse_text("[1, 1.5]", "json")
    TimeSeries([1, 3/2])
    """
    if fmt == "csv":
        vals = _csv_values(text, source)
    elif fmt == "json":
        vals = _json_values(text, source)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if len(vals) < 2:
        raise InputError(f"need at least 2 values, got {len(vals)}", None, source)
    if as_float:
        vals = [float(v) for v in vals]
    return TimeSeries(vals)


def ingest(path: str, fmt: Optional[str] = None, *, as_float: bool = False) -> TimeSeries:
    """Read a series; the format follows the extension unless ``fmt`` is given."""
    if fmt is None:
        fmt = "json" if os.path.splitext(path)[1].lower() == ".json" else "csv"
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(exc.strerror or "cannot read file", None, path) from None
    if not text.strip():
        raise InputError("empty file", 1, path)
    return parse_text(text, fmt, source=path, as_float=as_float)
