"""JSON / CSV / text rendering of results. Numbers are exact: ints, or rationals as "num/den"."""

from __future__ import annotations

import csv
import io

from .deformation import AssembledRep
from .moduli import SubgroupReport
from .weights import WeightRep

SUBGROUP_FIELDS = ["p", "q", "k_label", "fixed_dim", "excess", "moduli_dim", "semifree", "lebrun"]

_WEIGHT_LIST = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [
            {"type": "string", "pattern": r"^\(-?\d+,-?\d+\)$"},
            {"type": "integer", "minimum": 1},
        ],
        "minItems": 2,
        "maxItems": 2,
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n", "rep", "dims", "subgroups"],
    "properties": {
        "n": {"type": "integer"},
        "rep": {
            "type": "object",
            "required": ["rep1", "rep2", "rep3"],
            "properties": {"rep1": _WEIGHT_LIST, "rep2": _WEIGHT_LIST, "rep3": _WEIGHT_LIST},
        },
        "dims": {
            "type": "object",
            "required": ["rep1", "rep2", "rep3", "total"],
            "properties": {k: {"type": "integer"} for k in ("rep1", "rep2", "rep3", "total")},
        },
        "subgroups": {
            "type": "array",
            "items": {
                "type": "object",
                "required": SUBGROUP_FIELDS,
                "properties": {
                    "p": {"type": "integer"},
                    "q": {"type": "integer"},
                    "k_label": {"type": ["string", "null"]},
                    "fixed_dim": {"type": "integer"},
                    "excess": {"type": "boolean"},
                    "moduli_dim": {"type": ["integer", "null"]},
                    "semifree": {"type": "boolean"},
                    "lebrun": {"type": "boolean"},
                },
            },
        },
    },
}

VERIFY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n_from", "n_to", "passed", "checks", "reports"],
    "properties": {
        "n_from": {"type": "integer"},
        "n_to": {"type": "integer"},
        "passed": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "name", "passed", "detail"],
                "properties": {
                    "n": {"type": "integer"},
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
            },
        },
        "reports": {"type": "array", "items": REPORT_SCHEMA},
    },
}


def weight_list(rep: WeightRep) -> list[list]:
    return [[str(w), k] for w, k in rep.items()]


def report_dict(n: int, rep: AssembledRep, subgroups: list[SubgroupReport] = ()) -> dict:
    return {
        "n": n,
        "rep": {"rep1": weight_list(rep.rep1), "rep2": weight_list(rep.rep2), "rep3": weight_list(rep.rep3)},
        "dims": rep.dims,
        "subgroups": [s.as_dict() for s in subgroups],
    }


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def subgroups_csv(reports: list[SubgroupReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SUBGROUP_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow({k: _csv_value(v) for k, v in r.as_dict().items()})
    return buf.getvalue()


def rep_csv(rep: AssembledRep) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["block", "m", "n", "multiplicity"])
    for name, block in (("rep1", rep.rep1), ("rep2", rep.rep2), ("rep3", rep.rep3)):
        for w, k in block.items():
            writer.writerow([name, w.m, w.n, k])
    return buf.getvalue()


def format_rep_brace(rep: WeightRep) -> str:
    """``{(0,0)x2, (1,0)}`` style listing."""
    return "{" + ", ".join(f"{w}x{k}" if k > 1 else str(w) for w, k in rep.items()) + "}"


def table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(h) for h in headers]] + [["-" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
