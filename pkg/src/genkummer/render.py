"""Text renderings (json, markdown, csv) of diamonds, strata, motives and reports.

All renderers are deterministic: same input, same bytes.  Large integers are
written as decimal strings in JSON.
"""

from __future__ import annotations

import csv
import io
import json

from .graded import HodgeDiamond
from .kummer import StrataReport, VerificationReport
from .motive import MotiveExpr

FORMATS = ("json", "markdown", "csv")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def diamond_to_json(d: HodgeDiamond, n: int) -> dict:
    return {"n": n, "entries": [{"p": p, "q": q, "h": str(h)} for (p, q), h in d.items()]}


def diamond_from_json(obj: dict) -> HodgeDiamond:
    return HodgeDiamond({(e["p"], e["q"]): int(e["h"]) for e in obj["entries"]})


def diamond_triangle(d: HodgeDiamond, dim: int) -> str:
    """The diamond as centred rows, top total degree first, ``h^{k,0}`` leftmost."""
    if dim < 0:
        return ""
    width = max([len(str(h)) for _, h in d.items()] + [1])
    lines = []
    for k in range(2 * dim, -1, -1):
        cells = [d[p, k - p] for p in range(min(k, dim), max(0, k - dim) - 1, -1)]
        indent = (dim + 1 - len(cells)) * width
        gap = " " * width
        lines.append((" " * indent + gap.join(str(h).center(width) for h in cells)).rstrip())
    return "\n".join(lines) + "\n"


def render_betti(d: HodgeDiamond, n: int, fmt: str) -> str:
    betti = d.betti()
    if fmt == "json":
        return _json({"n": n, "betti": [str(b) for b in betti]})
    if fmt == "csv":
        return _csv(["k", "b"], enumerate(betti))
    return " ".join(map(str, betti)) + "\n"


def render_hodge(d: HodgeDiamond, n: int, fmt: str) -> str:
    if fmt == "json":
        return _json(diamond_to_json(d, n))
    if fmt == "csv":
        return _csv(["p", "q", "h"], ((p, q, h) for (p, q), h in d.items()))
    dim = 2 * (n - 1)
    return f"# Hodge diamond of K^[{n}]\n\n```\n{diamond_triangle(d, dim)}```\n"


def render_strata(report: StrataReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report.to_json())
    rows = [
        (
            " ".join(map(str, s.partition.parts)),
            s.torsion_multiplicity,
            s.dim_base_stratum,
            s.dim_total_stratum,
            s.dim_fiber,
            s.tate_shift,
        )
        for s in report.strata
    ]
    header = ["partition", "torsion_multiplicity", "dim_base_stratum", "dim_total_stratum", "dim_fiber", "tate_shift"]
    if fmt == "csv":
        return _csv(header, rows)
    out = [f"# Strata of K^[{report.n}] -> K^({report.n})", ""]
    out.append("| " + " | ".join(header) + " |")
    out.append("|" + "---|" * len(header))
    out += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
    out += [
        "",
        f"total_strata_count: {report.total_strata_count}",
        f"total_motive_summands: {report.total_motive_summands}",
        f"semi_small_verified: {str(report.semi_small_verified).lower()}",
    ]
    return "\n".join(out) + "\n"


def render_motive(expr: MotiveExpr, n: int, fmt: str) -> str:
    if fmt == "json":
        return _json({"n": n, **expr.to_json()})
    if fmt == "csv":
        rows = [
            (" ".join(f"{k}^{c}" for k, c in t.sym_factors), t.tate_shift, t.multiplicity)
            for t in expr.terms
        ]
        return _csv(["parts_multiplicities", "tate_shift", "multiplicity"], rows)
    out = [f"# {expr.label}", ""]
    out += [f"- {t}" for t in expr.terms]
    return "\n".join(out) + "\n"


def render_verification(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report.to_json())
    rows = [(c.n, c.name, "pass" if c.passed else "FAIL", c.detail) for c in report.checks]
    if fmt == "csv":
        return _csv(["n", "check", "result", "detail"], rows)
    out = ["| n | check | result | detail |", "|---|---|---|---|"]
    out += ["| " + " | ".join(map(str, r)) + " |" for r in rows]
    failed = len(report.failures())
    out += ["", f"{len(report.checks) - failed}/{len(report.checks)} checks passed"]
    return "\n".join(out) + "\n"
