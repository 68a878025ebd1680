"""CSV, JSON and plain-table renderings of verification records, and their parsers.

CSV header (fixed)::

    theorem_id,p,r,k,g,n,predicted,observed,h_neg_p,aux_jacobi,status

Signs render as ``+1``/``-1``, parities as ``even``/``odd``, sign-count
pairs as ``plus:minus`` and residues as plain integers. ``aux_jacobi`` is a
``;``-separated list of ``key=value`` items: the Jacobi symbols first, then
any other auxiliary values. The ``lerch`` multiplier has no column of its
own and travels there as ``a=<value>``.
"""

import csv
import io
import json
import os
import sys

from .verifier import (
    CONJECTURE_MATCH,
    MATCH,
    MISMATCH,
    REQUIRED_PARAMS,
    STATUSES,
    THEOREM_IDS,
    TheoremCase,
    VerificationRecord,
)

CSV_HEADER = ("theorem_id", "p", "r", "k", "g", "n", "predicted", "observed",
              "h_neg_p", "aux_jacobi", "status")
_PARAM_COLUMNS = ("p", "r", "k", "g", "n")
_SIGN_IDS = frozenset(THEOREM_IDS) - {"np-parity", "vandermonde-e", "primroot-split"}


class ReportFormatError(ValueError):
    """A report file that does not parse; carries the file name and line."""

    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def render_value(theorem, value):
    if theorem == "primroot-split":
        return f"{value[0]}:{value[1]}"
    if theorem in _SIGN_IDS:
        return f"{value:+d}"
    return str(value)


def parse_value(theorem, text):
    if theorem == "primroot-split":
        plus, minus = text.split(":")
        return (int(plus), int(minus))
    if theorem == "np-parity":
        if text not in ("even", "odd"):
            raise ValueError(f"bad parity {text!r}")
        return text
    value = int(text)
    if theorem in _SIGN_IDS and value not in (1, -1):
        raise ValueError(f"bad sign {text!r}")
    return value


def _aux_items(record):
    items = []
    if record.case.id == "lerch":
        items.append(("a", record.case["a"]))
    items.extend(record.aux.get("jacobi", {}).items())
    items.extend((k, v) for k, v in record.aux.items() if k not in ("jacobi", "h_neg_p"))
    return items


def to_row(record):
    """Flat CSV row (all strings) for one record."""
    case = record.case
    row = {"theorem_id": case.id}
    for name in _PARAM_COLUMNS:
        row[name] = str(case.params[name]) if name in case.params else ""
    row["predicted"] = render_value(case.id, record.predicted)
    row["observed"] = render_value(case.id, record.observed)
    h = record.aux.get("h_neg_p")
    row["h_neg_p"] = "" if h is None else str(h)
    row["aux_jacobi"] = ";".join(f"{k}={v}" for k, v in _aux_items(record))
    row["status"] = record.status
    return row


def from_row(row):
    tid = row["theorem_id"]
    if tid not in REQUIRED_PARAMS:
        raise ValueError(f"unknown theorem id {tid!r}")
    params = {name: int(row[name]) for name in _PARAM_COLUMNS if row[name] != ""}
    aux = {}
    jac = {}
    if row["h_neg_p"] != "":
        aux["h_neg_p"] = int(row["h_neg_p"])
    aux["jacobi"] = jac
    if row["aux_jacobi"]:
        for item in row["aux_jacobi"].split(";"):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"bad aux item {item!r}")
            if key == "a" and tid == "lerch":
                params["a"] = int(value)
            elif key.startswith("("):
                jac[key] = int(value)
            else:
                aux[key] = int(value)
    if row["status"] not in STATUSES:
        raise ValueError(f"unknown status {row['status']!r}")
    return VerificationRecord(
        TheoremCase(tid, params),
        parse_value(tid, row["predicted"]),
        parse_value(tid, row["observed"]),
        aux,
        row["status"],
    )


def to_json_obj(record):
    def plain(v):
        return list(v) if isinstance(v, tuple) else v

    return {
        "case": {"id": record.case.id, "params": dict(record.case.params)},
        "predicted": plain(record.predicted),
        "observed": plain(record.observed),
        "aux": record.aux,
        "status": record.status,
    }


def from_json_obj(obj):
    case = TheoremCase(obj["case"]["id"], dict(obj["case"]["params"]))

    def typed(v):
        if case.id == "primroot-split":
            return tuple(v)
        return v

    if obj["status"] not in STATUSES:
        raise ValueError(f"unknown status {obj['status']!r}")
    aux = dict(obj["aux"])
    aux.setdefault("jacobi", {})
    return VerificationRecord(case, typed(obj["predicted"]), typed(obj["observed"]), aux, obj["status"])


def render_csv(records):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(to_row(rec))
    return buf.getvalue()


def render_json(records):
    return json.dumps([to_json_obj(r) for r in records], indent=2) + "\n"


def _use_color(stream):
    return not os.environ.get("NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


_COLORS = {MATCH: "32", CONJECTURE_MATCH: "32", MISMATCH: "31"}


def render_table(records, color=False):
    rows = [to_row(r) for r in records]
    widths = {c: len(c) for c in CSV_HEADER}
    for row in rows:
        for c in CSV_HEADER:
            widths[c] = max(widths[c], len(row[c]))
    lines = ["  ".join(c.ljust(widths[c]) for c in CSV_HEADER).rstrip()]
    for row in rows:
        cells = []
        for c in CSV_HEADER:
            cell = row[c].ljust(widths[c])
            if color and c == "status":
                code = _COLORS.get(row[c], "33")
                cell = f"\x1b[{code}m{row[c]}\x1b[0m" + " " * (widths[c] - len(row[c]))
            cells.append(cell)
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render(records, fmt, stream=None):
    if fmt == "csv":
        return render_csv(records)
    if fmt == "json":
        return render_json(records)
    if fmt == "table":
        return render_table(records, color=_use_color(stream or sys.stdout))
    raise ValueError(f"unknown report format {fmt!r}")


def parse_csv(text, path="<csv>"):
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return []
    if tuple(header) != CSV_HEADER:
        raise ReportFormatError(path, 1, "unexpected CSV header")
    records = []
    for fields in reader:
        line = reader.line_num
        if not fields:
            continue
        if len(fields) != len(CSV_HEADER):
            raise ReportFormatError(path, line, f"expected {len(CSV_HEADER)} fields, got {len(fields)}")
        try:
            records.append(from_row(dict(zip(CSV_HEADER, fields))))
        except (ValueError, KeyError) as exc:
            raise ReportFormatError(path, line, str(exc)) from None
    return records


def _json_line_of_item(text, index):
    # line on which the index-th top-level array element starts
    decoder = json.JSONDecoder()
    pos = text.index("[") + 1
    for _ in range(index + 1):
        while text[pos] in " \t\r\n,":
            pos += 1
        start = pos
        _, pos = decoder.raw_decode(text, pos)
    return text.count("\n", 0, start) + 1


def parse_json(text, path="<json>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportFormatError(path, exc.lineno, exc.msg) from None
    if not isinstance(data, list):
        raise ReportFormatError(path, 1, "top level must be an array of records")
    records = []
    for i, obj in enumerate(data):
        try:
            records.append(from_json_obj(obj))
        except (ValueError, KeyError, TypeError) as exc:
            raise ReportFormatError(path, _json_line_of_item(text, i), f"record {i}: {exc}") from None
    return records


def parse_report(text, path="<report>"):
    """Parse CSV or JSON, sniffing the format from the first character."""
    stripped = text.lstrip()
    if not stripped:
        return []
    if stripped[0] == "[":
        return parse_json(text, path)
    return parse_csv(text, path)


def load_report(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ReportFormatError(path, 0, exc.strerror or str(exc)) from None
    except UnicodeDecodeError:
        raise ReportFormatError(path, 1, "not UTF-8 text") from None
    return parse_report(text, path)


def summary_by_theorem(records):
    out = {}
    for rec in records:
        counts = out.setdefault(rec.case.id, {s: 0 for s in STATUSES} | {"total": 0})
        counts[rec.status] += 1
        counts["total"] += 1
    return {tid: out[tid] for tid in THEOREM_IDS if tid in out}


def format_summary(counts):
    parts = [f"cases: {counts['total']}"]
    parts.extend(f"{s}: {counts[s]}" for s in STATUSES)
    return "  ".join(parts)
