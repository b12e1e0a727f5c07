"""Regenerate the four published value tables and serialise them."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable

from .recurrences import (
    DOMINO_4XM,
    TATAMI_2XM,
    TATAMI_3XM,
    TATAMI_4XM,
    count_family,
    count_kplus1_family,
    count_square_tile_family,
)

FORMATS = ("csv", "json", "markdown")
_FORMAT_ALIASES = {"md": "markdown"}


@dataclass(frozen=True)
class _Layout:
    row_param: str
    col_param: str
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cell: Callable[[int, int], int]


_TATAMI_BY_ROWS = {2: TATAMI_2XM, 3: TATAMI_3XM, 4: TATAMI_4XM}

LAYOUTS: dict[str, _Layout] = {
    "GENERAL_KX1": _Layout("m", "n", tuple(range(2, 11)), tuple(range(1, 16)), count_square_tile_family),
    "KPLUS1": _Layout("k", "p", tuple(range(2, 7)), tuple(range(1, 10)), lambda k, p: count_kplus1_family(k, p * k)),
    "DOMINO_4XM": _Layout("rows", "m", (4,), tuple(range(1, 15)), lambda _, m: count_family(DOMINO_4XM, m)),
    "TATAMI": _Layout("m", "n", (2, 3, 4), tuple(range(1, 16)), lambda r, n: count_family(_TATAMI_BY_ROWS[r], n)),
}

TABLE_NAMES = tuple(LAYOUTS)


def canonical_name(name: str) -> str:
    key = name.strip().upper().replace("-", "_")
    if key not in LAYOUTS:
        known = ", ".join(n.lower().replace("_", "-") for n in LAYOUTS)
        raise KeyError(f"unknown table {name!r} (known: {known})")
    return key


def canonical_format(fmt: str) -> str:
    fmt = _FORMAT_ALIASES.get(fmt.lower(), fmt.lower())
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r} (known: csv, json, md)")
    return fmt


@dataclass
class GoldenTable:
    name: str
    row_param: str
    col_param: str
    rows: list[int]
    cols: list[int]
    cells: dict[tuple[int, int], int] = field(default_factory=dict)

    def row_values(self, r: int) -> list[int]:
        return [self.cells[(r, c)] for c in self.cols]


def build_table(name: str) -> GoldenTable:
    """Compute every cell from the recurrences."""
    key = canonical_name(name)
    lay = LAYOUTS[key]
    cells = {(r, c): lay.cell(r, c) for r in lay.rows for c in lay.cols}
    return GoldenTable(key, lay.row_param, lay.col_param, list(lay.rows), list(lay.cols), cells)


@dataclass(frozen=True)
class Mismatch:
    row: int
    col: int
    expected: int | None
    computed: int | None

    def __str__(self) -> str:
        return f"({self.row}, {self.col}): expected {self.expected}, computed {self.computed}"


@dataclass
class VerifyReport:
    name: str
    checked: int
    mismatches: list[Mismatch]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self) -> str:
        head = f"{self.name}: {'pass' if self.ok else 'FAIL'} ({self.checked} cells checked"
        if self.ok:
            return head + ")"
        lines = [head + f", {len(self.mismatches)} mismatched)"]
        lines += [f"  {m}" for m in self.mismatches]
        return "\n".join(lines)


def verify_table(name: str, expected: dict[int, list[int]] | None = None) -> VerifyReport:
    """Compare the computed table with the transcribed values cell by cell.

    ``expected`` overrides the embedded data (used for fault injection).
    """
    table = build_table(name)
    if expected is None:
        from .golden import EXPECTED

        expected = EXPECTED[table.name]
    want = {(r, c): v for r, vals in expected.items() for c, v in zip(table.cols, vals)}
    mismatches = []
    checked = 0
    for key in sorted(set(want) | set(table.cells)):
        checked += 1
        got, exp = table.cells.get(key), want.get(key)
        if got != exp:
            mismatches.append(Mismatch(key[0], key[1], exp, got))
    return VerifyReport(table.name, checked, mismatches)


def emit(table: GoldenTable, fmt: str) -> str:
    fmt = canonical_format(fmt)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"{table.row_param}/{table.col_param}", *table.cols])
        for r in table.rows:
            writer.writerow([r, *table.row_values(r)])
        return buf.getvalue()
    if fmt == "json":
        payload = {
            "name": table.name,
            "row_param": table.row_param,
            "col_param": table.col_param,
            "rows": [
                {"param": r, "values": [str(v) for v in table.row_values(r)]} for r in table.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    corner = f"{table.row_param} \\ {table.col_param}"
    lines = [
        "| " + " | ".join([corner, *map(str, table.cols)]) + " |",
        "|" + "---|" * (len(table.cols) + 1),
    ]
    for r in table.rows:
        lines.append("| " + " | ".join(map(str, [r, *table.row_values(r)])) + " |")
    return "\n".join(lines) + "\n"


def parse(text: str, fmt: str, name: str | None = None) -> GoldenTable:
    """Inverse of :func:`emit` for CSV and JSON.

    CSV does not carry the table name, so pass ``name`` to get it back.
    """
    fmt = canonical_format(fmt)
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        row_param, _, col_param = rows[0][0].partition("/")
        cols = [int(c) for c in rows[0][1:]]
        table = GoldenTable(name or "", row_param, col_param, [], cols)
        for line in rows[1:]:
            r = int(line[0])
            table.rows.append(r)
            for c, v in zip(cols, line[1:]):
                table.cells[(r, c)] = int(v)
        return table
    if fmt == "json":
        payload = json.loads(text)
        cols = list(LAYOUTS[canonical_name(payload["name"])].cols)
        table = GoldenTable(payload["name"], payload["row_param"], payload["col_param"], [], cols)
        for row in payload["rows"]:
            table.rows.append(int(row["param"]))
            for c, v in zip(cols, row["values"]):
                table.cells[(int(row["param"]), c)] = int(v)
        return table
    raise ValueError("markdown tables are write-only")
