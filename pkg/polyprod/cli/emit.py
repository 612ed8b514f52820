"""Serialization of ExperimentReport to JSON or CSV bytes.

Integers beyond 2^53 are written as decimal strings so that JSON readers
with double-precision numbers lose nothing. CSV follows RFC 4180: a header
row, CRLF line endings, minimal quoting.
"""

import csv
import io
import json
from typing import Any
from typing import Dict
from typing import List
from typing import Literal
from typing import Optional

from polyprod.cli.report import ExperimentReport


JSON_SAFE_INTEGER = 2**53

# Key of the list in the results payload that becomes the CSV rows. Commands
# not listed emit a single row of their scalar results.
PRIMARY_RECORDS: Dict[str, str] = {
    "missing-avg": "per_n",
    "fields": "classes",
    "powers": "solutions",
    "exceptional": "pairs",
    "binomial-check": "results",
    "root-distance": "roots",
}

# Column names for records stored as tuples.
TUPLE_COLUMNS: Dict[str, List[str]] = {"roots": ["re", "im"]}

OutputFormat = Literal["json", "csv"]


def exact(value: Any) -> Any:
    """Replace integers with |v| > 2^53 by decimal strings, recursively."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > JSON_SAFE_INTEGER else value
    if isinstance(value, dict):
        return {key: exact(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(item) for item in value]
    return value


def emit_json(report: ExperimentReport) -> bytes:
    payload = exact(report.model_dump())
    text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(item) for item in value)
    if isinstance(value, dict):
        return json.dumps(exact(value), sort_keys=True, separators=(",", ":"))
    return str(value)


def _rows(command: str, results: Dict[str, Any]) -> List[Dict[str, Any]]:
    key: Optional[str] = PRIMARY_RECORDS.get(command)
    if key is None:
        return [
            {name: value for name, value in results.items() if not _is_table(value)}
        ]
    records = results.get(key) or []
    columns = TUPLE_COLUMNS.get(key)
    if columns is not None:
        return [dict(zip(columns, record)) for record in records]
    return list(records)


def _is_table(value: Any) -> bool:
    return isinstance(value, list) and any(isinstance(v, dict) for v in value)


def emit_csv(report: ExperimentReport) -> bytes:
    rows = _rows(report.command, report.results)
    header: List[str] = []
    for row in rows:
        header.extend(name for name in row if name not in header)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(name)) for name in header])
    return buffer.getvalue().encode("utf-8")


def emit(report: ExperimentReport, output_format: OutputFormat = "json") -> bytes:
    """Serialize a report.

    Args:
        report: The report to write.
        output_format: "json" for the full envelope, "csv" for the primary
            records of the results payload.

    Returns:
        bytes: UTF-8 encoded output.
    """
    if output_format == "csv":
        return emit_csv(report)
    return emit_json(report)
