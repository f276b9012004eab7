"""Reproduce the two counting tables and serialize rows.

Table 1 lists ``c(n)`` for a handful of orders up to ``10**30``; Table 2
lists, for each ``alpha``, the range of orders with exactly ``alpha``
valid component pairs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, fields
from typing import Iterable, Optional, Sequence

from .counting import c_of_n, order_range_for_count

TABLE1_ORDERS = (
    10,
    100,
    1000,
    10**4,
    10**5,
    10**6,
    10**9,
    10**10,
    10**15,
    10**20,
    10**25,
    10**30,
)
TABLE2_MAX_ALPHA = 10

FORMATS = ("json", "csv", "markdown", "plain")


@dataclass(frozen=True)
class Table1Row:
    n: int
    c: int

    # fields holding unbounded integers; JSON carries them as strings
    big = ("n",)


@dataclass(frozen=True)
class Table2Row:
    alpha: int
    min_n: int
    max_n: int

    big = ("min_n", "max_n")


def table1(orders: Iterable[int] = TABLE1_ORDERS) -> list[Table1Row]:
    orders = list(orders)
    # validate everything before computing anything
    values = [c_of_n(n) for n in orders]
    return [Table1Row(n, c) for n, c in zip(orders, values)]


def table2(max_alpha: int = TABLE2_MAX_ALPHA) -> list[Table2Row]:
    if isinstance(max_alpha, bool) or not isinstance(max_alpha, int):
        raise TypeError("max_alpha must be an int")
    if max_alpha < 1:
        raise ValueError(f"max_alpha must be positive, got {max_alpha}")
    rows = []
    for alpha in range(1, max_alpha + 1):
        r = order_range_for_count(alpha)
        rows.append(Table2Row(alpha, r.min_n, r.max_n))
    return rows


def _row_type(rows: Sequence, row_type):
    if row_type is None:
        if not rows:
            raise ValueError("row_type is required to render an empty table")
        row_type = type(rows[0])
    if row_type not in (Table1Row, Table2Row):
        raise TypeError(f"cannot render rows of type {row_type.__name__}")
    if any(type(r) is not row_type for r in rows):
        raise TypeError("rows of mixed types")
    return row_type


def _fmt_int(v: int, thousands: bool) -> str:
    return f"{v:,}" if thousands else str(v)


def render(rows: Sequence, fmt: str, row_type: Optional[type] = None, thousands: bool = False) -> str:
    """Serialize table rows as ``json``, ``csv``, ``markdown`` or ``plain``.

    Output is deterministic and newline-terminated.  Integers are written
    as plain decimal digits unless ``thousands`` is set.  In JSON the
    unbounded fields (``n``, ``min_n``, ``max_n``) are strings.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    rows = list(rows)
    row_type = _row_type(rows, row_type)
    names = [f.name for f in fields(row_type)]

    if fmt == "json":
        docs = []
        for r in rows:
            docs.append(
                {
                    k: (_fmt_int(getattr(r, k), thousands) if k in row_type.big else getattr(r, k))
                    for k in names
                }
            )
        return json.dumps(docs, indent=2) + "\n"

    cells = [[_fmt_int(getattr(r, k), thousands) for k in names] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(names)
        writer.writerows(cells)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(names) + " |", "|" + "|".join("---:" for _ in names) + "|"]
        lines += ["| " + " | ".join(row) + " |" for row in cells]
        return "\n".join(lines) + "\n"

    widths = [max([len(k)] + [len(row[i]) for row in cells]) for i, k in enumerate(names)]
    lines = ["  ".join(k.rjust(w) for k, w in zip(names, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _int(text) -> int:
    if isinstance(text, int):
        return text
    return int(str(text).replace(",", ""))


def load(text: str, fmt: str, row_type: type) -> list:
    """Parse ``json`` or ``csv`` output of :func:`render` back into rows."""
    names = [f.name for f in fields(row_type)]
    if fmt == "json":
        return [row_type(*(_int(d[k]) for k in names)) for d in json.loads(text)]
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != names:
            raise ValueError(f"expected header {names}, got {header}")
        return [row_type(*map(_int, rec)) for rec in reader if rec]
    raise ValueError(f"cannot load format {fmt!r}")
