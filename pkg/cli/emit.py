"""Tabular output: the T(n, k) triangle, CSV exports, b-files and the run history."""

from typing import Iterable, List, Optional, Sequence

import pandas as pd

from combinatorics import golden
from combinatorics.eulerian import TermDiff
from combinatorics.partitions import PartitionTable
from combinatorics.poly import BivariatePolynomial
from combinatorics.stabilization import SeriesPrefix


def _csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def triangle_frame(table: PartitionTable, mark_bold: bool = False) -> pd.DataFrame:
    """One row per n, one column per k; cells right of the diagonal are blank."""
    size = table.N + 1
    cells = [["" for _ in range(size)] for _ in range(size)]
    for n, k, value in table.cells():
        text = str(value)
        if mark_bold and golden.is_bold(n, k):
            text += "*"
        cells[n][k] = text
    frame = pd.DataFrame(cells, index=pd.Index(range(size), name="n"), columns=pd.Index(range(size), name="k"))
    return frame


def triangle_text(table: PartitionTable, mark_bold: bool = False) -> str:
    return triangle_frame(table, mark_bold).to_string() + "\n"


def triangle_csv(table: PartitionTable) -> str:
    frame = pd.DataFrame(list(table.cells()), columns=["n", "k", "T"])
    return _csv(frame.astype(object))


def triangle_bfile(table: PartitionTable) -> str:
    """b-file lines "index value", reading the triangle row by row from index 0."""
    values = [value for _, _, value in table.cells()]
    return "".join(f"{i} {value}\n" for i, value in enumerate(values))


def polynomial_csv(poly: BivariatePolynomial) -> str:
    frame = pd.DataFrame([(d, m, c) for (d, m), c in poly.items()], columns=["d", "m", "coefficient"])
    return _csv(frame.astype(object))


def series_csv(prefix: SeriesPrefix) -> str:
    frame = pd.DataFrame({"k": range(prefix.K + 1), "a_k": list(prefix.coeffs)})
    return _csv(frame.astype(object))


def diff_text(rows: Sequence[TermDiff], labels: Sequence[str]) -> str:
    """Aligned table of disagreeing terms; absent values print as "-". Empty string when there are none."""
    if not rows:
        return ""
    records = [[row.d, row.m, *("-" if v is None else str(v) for v in row.values)] for row in rows]
    frame = pd.DataFrame(records, columns=["d", "m", *labels])
    return frame.to_string(index=False) + "\n"


def history_text(runs: Iterable, columns: Optional[List[str]] = None) -> str:
    columns = columns or ["id", "suite", "status", "severity", "checked", "violation_count", "duration",
                          "started_at"]
    records = [{column: getattr(run, column) for column in columns} for run in runs]
    if not records:
        return "no recorded runs\n"
    frame = pd.DataFrame(records, columns=columns)
    if "duration" in frame:
        frame["duration"] = frame["duration"].map(lambda s: f"{s:.2f}s")
    return frame.to_string(index=False) + "\n"
