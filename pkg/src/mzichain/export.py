"""CSV and JSON emitters for sweep results.

Floats are rendered with 17 significant digits (``format(x, ".17g")``), which
round-trips every IEEE double exactly, so emitted files are byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Optional

from .sweeps import SweepResult, SweepRow

CSV_HEADER = ("n", "phi", "psi", "i_upper", "i_lower", "r")


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _row_fields(row: SweepRow) -> list[str]:
    return [str(row.n), *(fmt_float(v) for v in (row.phi, row.psi, row.i_upper, row.i_lower, row.r))]


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(_row_fields(row))
    return buf.getvalue()


def read_csv_rows(text: str) -> list[SweepRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {reader.fieldnames!r}")
    return [
        SweepRow(int(r["n"]), float(r["phi"]), float(r["psi"]),
                 float(r["i_upper"]), float(r["i_lower"]), float(r["r"]))
        for r in reader
    ]


def row_to_dict(row: SweepRow) -> dict:
    return {"n": row.n, "phi": row.phi, "psi": row.psi,
            "i_upper": row.i_upper, "i_lower": row.i_lower, "r": row.r}


def result_to_json(result: SweepResult, fringe_reports: Optional[list] = None) -> str:
    doc = {
        "config": result.config.to_dict(),
        "rows": [row_to_dict(r) for r in result.rows],
    }
    if result.oracle_report is not None:
        doc["oracle_report"] = result.oracle_report.to_dict()
    if fringe_reports is not None:
        doc["fringe_report"] = [f.to_dict() for f in fringe_reports]
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
