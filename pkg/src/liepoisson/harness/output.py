"""CSV and JSON serialization of study reports."""
import csv
import io
import json
import math


def _cell(value):
    if isinstance(value, float):
        return f"{value:.17g}"
    if value is None:
        return ""
    return str(value)


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def to_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(row[c]) for c in report.columns])
    return buf.getvalue()


def to_json(report):
    return json.dumps(_jsonable(report.to_dict()), indent=2, sort_keys=True) + "\n"


def render(report, fmt):
    return to_csv(report) if fmt == "csv" else to_json(report)


def write_report(report, fmt, path=None, stream=None):
    text = render(report, fmt)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    elif stream is not None:
        stream.write(text)
    return text
