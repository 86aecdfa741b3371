"""
Rendering of result rows as text tables, CSV or JSON.

Rows are flat dicts; every row of a report shares the key order of the first.
"""

import csv
import io
import json
import logging
import math
import os

from .. import config

logger = logging.getLogger("zeta_region.cli")


def round_significant(value, digits=config.JSON_SIGNIFICANT_DIGITS):
    """Round a float to `digits` significant digits; NaN and infinities become None."""
    if isinstance(value, bool) or not isinstance(value, float):
        return value
    if not math.isfinite(value):
        return None
    return float(f"{value:.{digits}g}")


def _text_cell(value):
    if value is None:
        return "-"
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return f"{value:.10g}"
    return str(value)


def format_text(rows, title=None):
    """
    Fixed-width table with a header line.

    Args:
        rows (list): Flat dicts sharing the same keys
        title (str, optional): Heading printed above the table

    Returns:
        str: The table, newline terminated
    """
    lines = []
    if title:
        lines.extend([title, "=" * len(title)])
    if rows:
        columns = list(rows[0])
        cells = [[_text_cell(row.get(column)) for column in columns] for row in rows]
        widths = [max(len(column), *(len(line[i]) for line in cells)) for i, column in enumerate(columns)]
        lines.append("  ".join(column.rjust(width) for column, width in zip(columns, widths)))
        lines.append("  ".join("-" * width for width in widths))
        for line in cells:
            lines.append("  ".join(cell.rjust(width) for cell, width in zip(line, widths)))
    return "\n".join(lines) + "\n"


def format_csv(rows):
    """CSV with a header row of field names; floats use repr, so no thousands separators."""
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: ("" if value is None else value) for key, value in row.items()})
    return buffer.getvalue()


def _rounded(rows):
    return [{key: round_significant(value) for key, value in row.items()} for row in rows]


def format_json(rows, title=None, sections=None):
    """
    JSON records with 12 significant digits and sorted keys.

    With a title or extra sections the payload is an object holding
    "report", "records" and one key per section; otherwise a bare array.

    Parsing the result and dumping it again with the same settings gives
    identical bytes.
    """
    if not title and not sections:
        return json.dumps(_rounded(rows), sort_keys=True, indent=2) + "\n"
    payload = {"report": title, "records": _rounded(rows)}
    for name, section_rows in (sections or {}).items():
        payload[name] = _rounded(section_rows)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def render(rows, output_format="text", title=None, sections=None):
    """
    Render rows in one of the OUTPUT_FORMATS.

    Text output appends one table per section; CSV carries the main rows only.

    Raises:
        ValueError: If the format is unknown
    """
    if output_format == "text":
        text = format_text(rows, title)
        for name, section_rows in (sections or {}).items():
            text += "\n" + format_text(section_rows, name)
        return text
    if output_format == "csv":
        return format_csv(rows)
    if output_format == "json":
        return format_json(rows, title, sections)
    raise ValueError(f"Unknown output format: {output_format}")


def write_output(text, path=None):
    """
    Print the report, or write it to `path`.

    Relative paths are resolved against $ZETA_REGION_OUTPUT_DIR when it is set.

    Returns:
        str or None: The file written, if any
    """
    if path is None:
        print(text, end="")
        return None
    override = os.environ.get(config.OUTPUT_DIR_ENV)
    if override and not os.path.isabs(path):
        path = os.path.join(override, path)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w") as f:
        f.write(text)
    logger.info(f"Report written to {path}")
    return path
