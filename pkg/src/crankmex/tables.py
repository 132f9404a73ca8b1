"""Bijection tables grouped by ``k``, with text / CSV / JSON rendering."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .bijections import BijectionTrace, even_mex_to_fixed_point, fixed_to_negcrank, neg_to_pos_crank
from .partitions import ClassTag, Partition, beta, class_beta, format_partition, member, partitions_of

TABLE_IDS = ("ab", "bc", "cd", "all")

_HEADERS = {
    "ab": ("X_e(n,k)", "(1) x G1(n-1,k)", "F*(n,k+1)"),
    "bc": ("F*(n,k+1)", "M_<0(n,k)"),
    "cd": ("M_<0(n,k)", "M_>0(n,k+1)"),
    "all": ("X_e(n,k)", "F*(n,k+1)", "M_<0(n,k)", "M_>0(n,k+1)"),
}

_ARROWS = {"rule-i": " →(i)→ ", "rule-ii": " →(ii)→ "}


@dataclass
class TableRow:
    k: int
    partitions: tuple[Partition, ...]
    cells: tuple[str, ...]
    rules: tuple[str, ...] = ()


@dataclass
class Table:
    table_id: str
    n: int
    headers: tuple[str, ...]
    rows: list[TableRow] = field(default_factory=list)

    def blocks(self) -> dict[int, list[TableRow]]:
        out: dict[int, list[TableRow]] = {}
        for row in self.rows:
            out.setdefault(row.k, []).append(row)
        return out

    def to_dict(self) -> dict:
        return {
            "table": self.table_id,
            "n": self.n,
            "headers": list(self.headers),
            "rows": [
                {
                    "k": r.k,
                    "cells": list(r.cells),
                    "partitions": [list(p) for p in r.partitions],
                    "rules": list(r.rules),
                }
                for r in self.rows
            ],
        }


def render_konan(trace: BijectionTrace) -> str:
    """The middle column of the even-mex table, e.g. ``(3 2 1, 2) →(ii)→ (1, 3 2^2)``."""
    steps = trace.konan_steps()
    out = steps[0].render()
    for s in steps[1:]:
        out += _ARROWS[s.rule] + s.render()
    return out


def _rows_for(tag: ClassTag, n: int) -> list[tuple[int, Partition]]:
    rows = [(class_beta(lam, tag), lam) for lam in partitions_of(n) if member(lam, tag)]
    rows.sort(key=lambda r: r[0])  # stable: enumeration order within a block
    return rows


def build_table(table_id: str, n: int) -> Table:
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table id {table_id!r}; expected one of {', '.join(TABLE_IDS)}")
    if n < 2:
        raise ValueError("tables need n >= 2")
    table = Table(table_id, n, _HEADERS[table_id])
    if table_id in ("ab", "all"):
        for k, lam in _rows_for(ClassTag.X_e, n):
            fp, trace = even_mex_to_fixed_point(lam)
            rules = tuple(trace.konan_rules())
            if table_id == "ab":
                parts = (lam, fp)
                cells = (format_partition(lam), render_konan(trace), format_partition(fp))
            else:
                neg = fixed_to_negcrank(fp)
                pos = neg_to_pos_crank(neg)
                parts = (lam, fp, neg, pos)
                cells = tuple(format_partition(p) for p in parts)
            table.rows.append(TableRow(k, parts, cells, rules))
    elif table_id == "bc":
        for k, fp in _rows_for(ClassTag.Fstar, n):
            neg = fixed_to_negcrank(fp)
            table.rows.append(TableRow(k - 1, (fp, neg), (format_partition(fp), format_partition(neg))))
    else:
        for k, neg in _rows_for(ClassTag.M_neg, n):
            pos = neg_to_pos_crank(neg)
            assert beta(pos) == k + 1
            table.rows.append(TableRow(k, (neg, pos), (format_partition(neg), format_partition(pos))))
    return table


def render_text(table: Table) -> str:
    widths = [len(h) for h in table.headers]
    for row in table.rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row.cells)]
    widths = [max(widths[0], 3)] + widths[1:]

    def line(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    rule = "-+-".join("-" * w for w in widths)
    out = [f"table {table.table_id}, n = {table.n}", line(table.headers), rule.replace("-", "=")]
    prev = None
    for row in table.rows:
        if prev is not None and row.k != prev:
            out.append(rule)
        out.append(line(row.cells))
        prev = row.k
    return "\n".join(out) + "\n"


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("k",) + table.headers)
    for row in table.rows:
        writer.writerow((row.k,) + row.cells)
    return buf.getvalue()


def render_json(table: Table) -> str:
    return json.dumps(table.to_dict(), indent=2, ensure_ascii=False) + "\n"


RENDERERS = {"text": render_text, "csv": render_csv, "json": render_json}
