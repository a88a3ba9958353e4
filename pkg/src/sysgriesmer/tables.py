"""Grids of best lower bounds with a provenance letter per cell."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .bounds import NONLINEAR, SETTINGS, Source, best_lower_bound

MAX_K = 16
MAX_D = 1024
FORMATS = ("csv", "markdown", "json")


@dataclass(frozen=True)
class TableSpec:
    q: int
    ks: tuple[int, ...]
    ds: tuple[int, ...]
    setting: str = "systematic"
    fmt: str = "csv"
    by_M: bool = False  # columns are word counts M instead of dimensions k

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2")
        if not self.ks or not self.ds:
            raise ValueError("table ranges must be non-empty")
        if self.setting not in SETTINGS:
            raise ValueError(f"unknown setting {self.setting!r}")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.by_M:
            if self.setting != NONLINEAR:
                raise ValueError("M columns are only meaningful for nonlinear codes")
            if min(self.ks) < self.q:
                raise ValueError(f"M must be at least q={self.q}")
            if max(self.ks) > self.q**MAX_K:
                raise ValueError(f"M must be at most q^{MAX_K}")
        elif not all(1 <= k <= MAX_K for k in self.ks):
            raise ValueError(f"k must lie in 1..{MAX_K}")
        if not all(1 <= d <= MAX_D for d in self.ds):
            raise ValueError(f"d must lie in 1..{MAX_D}")

    @property
    def column_label(self) -> str:
        return "M" if self.by_M else "k"


@dataclass(frozen=True)
class Cell:
    value: int
    source: str  # provenance letter


LEGEND = {s.letter: s.value for s in Source}


def build_table(spec: TableSpec) -> dict[tuple[int, int], Cell]:
    """Cells keyed by (d, column), in d-ascending then column-ascending order."""
    cells = {}
    for d in sorted(spec.ds):
        for c in sorted(spec.ks):
            kw = {"M": c} if spec.by_M else {"k": c}
            best = best_lower_bound(spec.q, d, setting=spec.setting, **kw)[0]
            cells[(d, c)] = Cell(best.value, best.source.letter)
    return cells


def _header(spec: TableSpec) -> list[str]:
    return ["d"] + [f"{spec.column_label}={c}" for c in sorted(spec.ks)]


def render(spec: TableSpec, cells: dict[tuple[int, int], Cell]) -> str:
    cols = sorted(spec.ks)
    if spec.fmt == "json":
        obj = {
            "q": spec.q,
            "setting": spec.setting,
            "columns": spec.column_label,
            "column_values": cols,
            "d_values": sorted(spec.ds),
            "cells": [
                {"d": d, spec.column_label: c, "value": cell.value, "source": cell.source}
                for (d, c), cell in cells.items()
            ],
            "legend": LEGEND,
        }
        return json.dumps(obj, indent=2) + "\n"
    legend = ", ".join(f"{k}={v}" for k, v in LEGEND.items())
    rows = [[str(d)] + [f"{cells[(d, c)].value}{cells[(d, c)].source}" for c in cols] for d in sorted(spec.ds)]
    if spec.fmt == "markdown":
        head = _header(spec)
        lines = [
            f"Best lower bounds on n, q={spec.q}, {spec.setting} codes",
            "",
            "| " + " | ".join(head) + " |",
            "|" + "|".join("---" for _ in head) + "|",
        ]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        lines += ["", f"Legend: {legend}"]
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    buf.write(f"# q={spec.q} setting={spec.setting}\n# legend: {legend}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_header(spec))
    writer.writerows(rows)
    return buf.getvalue()


def parse_table_json(text: str) -> tuple[TableSpec, dict[tuple[int, int], Cell]]:
    """Inverse of :func:`render` for the JSON format."""
    obj = json.loads(text)
    by_M = obj["columns"] == "M"
    spec = TableSpec(
        q=obj["q"],
        ks=tuple(obj["column_values"]),
        ds=tuple(obj["d_values"]),
        setting=obj["setting"],
        fmt="json",
        by_M=by_M,
    )
    label = spec.column_label
    cells = {(c["d"], c[label]): Cell(c["value"], c["source"]) for c in obj["cells"]}
    return spec, cells
