"""
Shared CLI plumbing: argument types, budget resolution and output writing
"""
import argparse
import csv
import io
import json
import sys
from typing import Any, Dict, List, Optional
import logging

from pydantic import BaseModel

from config import get_settings
from schemas.reports import ReportDocument

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Invalid flag combination detected after parsing"""


def parse_range(text: str) -> List[int]:
    """
    Parse "5", "1-12" or "2,4,6-8" into a sorted list of integers

    Raises:
        argparse.ArgumentTypeError: on malformed input
    """
    values = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                low, high = (int(x) for x in part.split("-", 1))
                if low < 0 or low > high:
                    raise ValueError
                values.update(range(low, high + 1))
            elif part:
                values.add(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    if not values:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return sorted(values)


def parse_type(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid type {text!r}, expected a,b,c")
    if len(parts) != 3 or min(parts) < 0:
        raise argparse.ArgumentTypeError(f"invalid type {text!r}, expected a,b,c")
    return parts


def apply_budget(args: argparse.Namespace) -> Optional[int]:
    """
    Install a --budget override on the cached settings

    Raises:
        UsageError: if --budget is given without --allow-large-budget
    """
    budget = getattr(args, "budget", None)
    if budget is None:
        return None
    if not getattr(args, "allow_large_budget", False):
        raise UsageError("--budget requires --allow-large-budget")
    if budget < 1:
        raise UsageError("--budget must be positive")
    settings = get_settings()
    settings.CHAINFORGE_BUDGET = budget
    logger.info(f"Vertex and point budgets raised to {budget}")
    return budget


def to_jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, list):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    return value


def _csv_rows(payload: Any) -> List[Dict[str, Any]]:
    # The first list of records found in the payload becomes the table
    if isinstance(payload, list):
        return [row if isinstance(row, dict) else {"value": row} for row in payload]
    if isinstance(payload, dict):
        for value in payload.values():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                return value
        return [payload]
    return [{"value": payload}]


def render_csv(payload: Any) -> str:
    rows = _csv_rows(payload)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    if not rows:
        return ""
    columns = list(rows[0].keys())
    writer.writerow(columns)
    for row in rows:
        cells = []
        for column in columns:
            value = row.get(column)
            if isinstance(value, (dict, list)):
                value = json.dumps(value, ensure_ascii=False)
            cells.append("" if value is None else value)
        writer.writerow(cells)
    return buffer.getvalue()


def write_output(report: ReportDocument, fmt: str, out: Optional[str]) -> None:
    """Write a report as JSON, CSV, or the raw diagram text"""
    if fmt in ("svg", "ascii"):
        text = report.payload["content"]
    elif fmt == "csv":
        text = render_csv(to_jsonable(report.payload))
    else:
        text = json.dumps(report.model_dump(mode="json"), sort_keys=False, ensure_ascii=False, indent=2) + "\n"

    if out:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"Report written to {out}")
    else:
        sys.stdout.write(text)
