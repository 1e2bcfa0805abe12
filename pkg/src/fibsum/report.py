"""Serialisation of verification reports: JSON, TSV and a human table.

Rationals are always written as canonical ``"p/q"`` strings.  JSON keys are
sorted and the layout is fixed, so ``dumps(loads(text)) == text``.  Timings
are excluded unless explicitly requested, which keeps repeated runs
byte-identical.
"""
from __future__ import annotations

import json
from typing import Iterable, Optional

from .catalog import CATALOG_VERSION, ParamTuple
from .exact import rat_from_str, rat_to_str
from .verifier import Failure, GridSpec, IntRange, VerificationReport

_AXES = ("n_range", "r_range", "s_range", "t_range")


def dump_json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _failure_dict(f: Failure) -> dict:
    return {
        "params": dict(f.params._asdict()),
        "lhs": rat_to_str(f.lhs),
        "mid": None if f.mid is None else rat_to_str(f.mid),
        "rhs": rat_to_str(f.rhs),
    }


def report_to_dict(rep: VerificationReport, timings: bool = False) -> dict:
    d = {
        "identity_id": rep.identity_id,
        "tuples_tested": rep.tuples_tested,
        "tuples_skipped": rep.tuples_skipped,
        "failures": [_failure_dict(f) for f in rep.failures],
        "grid": {ax: [getattr(rep.grid, ax).lo, getattr(rep.grid, ax).hi] for ax in _AXES},
        "seed": rep.seed,
    }
    if timings:
        d["wall_time"] = f"{rep.wall_time:.6f}"
    return d


def report_from_dict(d: dict) -> VerificationReport:
    grid = GridSpec(*(IntRange(*d["grid"][ax]) for ax in _AXES))
    failures = [
        Failure(
            ParamTuple(**f["params"]),
            rat_from_str(f["lhs"]),
            None if f["mid"] is None else rat_from_str(f["mid"]),
            rat_from_str(f["rhs"]),
        )
        for f in d["failures"]
    ]
    wall = float(d["wall_time"]) if "wall_time" in d else 0.0
    return VerificationReport(d["identity_id"], d["tuples_tested"], d["tuples_skipped"],
                              failures, grid, d["seed"], wall)


def to_json(reports: Iterable[VerificationReport], timings: bool = False) -> str:
    reports = list(reports)
    doc = {
        "catalog_version": CATALOG_VERSION,
        "reports": [report_to_dict(r, timings) for r in reports],
        "total_failures": sum(len(r.failures) for r in reports),
    }
    return dump_json_text(doc)


def from_json(text: str) -> list[VerificationReport]:
    return [report_from_dict(d) for d in json.loads(text)["reports"]]


TSV_REPORT_COLUMNS = ("kind", "identity_id", "tuples_tested", "tuples_skipped",
                      "n_range", "r_range", "s_range", "t_range", "seed")
TSV_FAILURE_COLUMNS = ("kind", "identity_id", "n", "r", "s", "t", "lhs", "mid", "rhs")


def to_tsv(reports: Iterable[VerificationReport], timings: bool = False) -> str:
    """One ``report`` row per report followed by its ``failure`` rows.

    Empty optional fields (seed, mid) are written as ``-``.
    """
    head = list(TSV_REPORT_COLUMNS) + (["wall_time"] if timings else [])
    lines = ["#" + "\t".join(head), "#" + "\t".join(TSV_FAILURE_COLUMNS)]
    for rep in reports:
        row = ["report", rep.identity_id, str(rep.tuples_tested), str(rep.tuples_skipped)]
        row += [str(getattr(rep.grid, ax)) for ax in _AXES]
        row.append("-" if rep.seed is None else str(rep.seed))
        if timings:
            row.append(f"{rep.wall_time:.6f}")
        lines.append("\t".join(row))
        for f in rep.failures:
            lines.append("\t".join([
                "failure", rep.identity_id, *(str(v) for v in f.params),
                rat_to_str(f.lhs), "-" if f.mid is None else rat_to_str(f.mid), rat_to_str(f.rhs),
            ]))
    return "\n".join(lines) + "\n"


def from_tsv(text: str) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if cols[0] == "report":
            grid = GridSpec(*(IntRange.parse(c) for c in cols[4:8]))
            seed = None if cols[8] == "-" else int(cols[8])
            wall = float(cols[9]) if len(cols) > 9 else 0.0
            reports.append(VerificationReport(cols[1], int(cols[2]), int(cols[3]), [], grid, seed, wall))
        elif cols[0] == "failure":
            n, r, s, t = (int(c) for c in cols[2:6])
            mid = None if cols[7] == "-" else rat_from_str(cols[7])
            reports[-1].failures.append(
                Failure(ParamTuple(n, r, s, t), rat_from_str(cols[6]), mid, rat_from_str(cols[8]))
            )
        else:
            raise ValueError(f"unknown TSV row kind {cols[0]!r}")
    return reports


def _short(x) -> str:
    text = rat_to_str(x)
    return text if len(text) <= 40 else text[:18] + "..." + text[-18:]


def to_human(reports: Iterable[VerificationReport], timings: bool = True) -> str:
    reports = list(reports)
    rows = [("identity", "tested", "skipped", "failures", "time", "minimal counterexample")]
    for rep in reports:
        cx: Optional[Failure] = rep.minimal_counterexample
        if cx is None:
            cx_text = "-"
        else:
            n, r, s, t = cx.params
            cx_text = f"(n={n}, r={r}, s={s}, t={t}) lhs={_short(cx.lhs)} rhs={_short(cx.rhs)}"
            if cx.mid is not None:
                cx_text += f" mid={_short(cx.mid)}"
        rows.append((rep.identity_id, str(rep.tuples_tested), str(rep.tuples_skipped),
                     str(len(rep.failures)), f"{rep.wall_time:.2f}s" if timings else "-", cx_text))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    out = []
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [row[i].rjust(widths[i]) for i in range(1, 5)] + [row[5]]
        out.append("  ".join(cells).rstrip())
    total = sum(len(r.failures) for r in reports)
    out.append(f"{len(reports)} reports, {total} failures")
    return "\n".join(out) + "\n"
