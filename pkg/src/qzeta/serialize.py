"""Rendering of results as text, JSON or CSV, and JSON parsing back."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .errors import UnsupportedFormat
from .padic import Report
from .qcore import QSeries, numeric_context
from .verify import IdentityReport, SuiteReport

FORMATS = ("text", "json", "csv")


def is_mp(v) -> bool:
    return hasattr(v, "_mpf_") or hasattr(v, "_mpc_")


def format_number(v) -> str:
    """Exact fraction string, or a decimal carrying the full stored precision."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    if is_mp(v):
        mp = getattr(v, "context", numeric_context(128))
        if hasattr(v, "_mpc_"):
            if v.imag == 0:
                return format_number(mp.mpf(v.real))
            return f"{format_number(v.real)}{'+' if v.imag >= 0 else '-'}{format_number(abs(v.imag))}i"
        s = mp.nstr(v, mp.dps)
        return s[:-2] if s.endswith(".0") else s
    return str(v)


def _table_rows(result) -> tuple[list[str], list[list]]:
    if isinstance(result, QSeries):
        return ["index", "exponent", "coeff"], [
            [e, str(Fraction(e, result.scale)), str(c)] for e, c in enumerate(result.coeffs)]
    if isinstance(result, Report):
        return ["N", "value", "diff_valuation", "target_valuation"], [
            [r["N"], r["value"], r["diff_valuation"], r["target_valuation"]]
            for r in result.to_dict()["levels"]]
    if isinstance(result, (IdentityReport, SuiteReport)):
        reps = result.identities if isinstance(result, SuiteReport) else [result]
        rows = []
        for rep in reps:
            name = rep.identity + (f"[{rep.variant}]" if rep.variant else "")
            for c in rep.cases:
                key = ";".join(f"{k}={v}" for k, v in c.params.items())
                rows.append([name, key, c.backend, c.residual, str(c.passed).lower()])
        return ["identity", "params", "backend", "residual", "pass"], rows
    if isinstance(result, list):
        header = list(result[0]) if result else []
        return header, [[_cell(r[k]) for k in header] for r in result]
    return ["value"], [[format_number(result)]]


def _cell(v):
    return v if isinstance(v, (int, str)) and not isinstance(v, bool) else format_number(v)


def to_jsonable(result):
    if isinstance(result, (QSeries, Report, IdentityReport, SuiteReport)):
        return result.to_dict()
    if isinstance(result, list):
        return [{k: _cell(v) for k, v in row.items()} for row in result]
    if isinstance(result, dict):
        return {k: _cell(v) for k, v in result.items()}
    return {"value": format_number(result)}


def emit(result, fmt: str = "text") -> str:
    """Render ``result`` (series, scalar, report or table rows) in ``fmt``."""
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"format must be one of {FORMATS}, got {fmt!r}")
    if fmt == "json":
        if isinstance(result, QSeries):
            return result.to_json() + "\n"
        return json.dumps(to_jsonable(result), indent=2) + "\n"
    if fmt == "csv":
        header, rows = _table_rows(result)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    return _text(result)


def _text(result) -> str:
    if isinstance(result, QSeries):
        return str(result) + "\n"
    if isinstance(result, Report):
        d = result.to_dict()
        lines = [f"p={d['p']} q={d['q']} degree={d['degree']} x={d['x']} alpha={d['alpha']} "
                 f"h={d['h']} loss={d['loss']}",
                 f"{'N':>3} {'v(diff)':>8} {'v(target)':>10}"]
        for r in d["levels"]:
            dv = "-" if r["diff_valuation"] is None else r["diff_valuation"]
            lines.append(f"{r['N']:>3} {dv!s:>8} {r['target_valuation']!s:>10}")
        lines.append(f"verdict: {d['verdict']}")
        return "\n".join(lines) + "\n"
    if isinstance(result, (IdentityReport, SuiteReport)):
        reps = result.identities if isinstance(result, SuiteReport) else [result]
        lines = []
        for rep in reps:
            s = rep.summary
            name = rep.identity + (f"[{rep.variant}]" if rep.variant else "")
            gate = "PASS" if rep.gate_pass else "FAIL"
            soft = all(not c.gated for c in rep.cases) and rep.cases
            if soft:
                gate = "SOFT"
            lines.append(f"{gate:<5} {name:<28} {s['passed']:>4}/{s['total']:<4} "
                         f"skipped={s['skipped']} max_residual={s['max_residual']}")
        if isinstance(result, SuiteReport):
            lines.append(f"suite {result.suite}: {'PASS' if result.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"
    if isinstance(result, list):
        header, rows = _table_rows(result)
        cells = [header] + [[str(c) for c in r] for r in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells) + "\n"
    return format_number(result) + "\n"


_LOADERS = {
    "series": QSeries.from_dict,
    "padic": Report.from_dict,
    "identity": IdentityReport.from_dict,
    "suite": SuiteReport.from_dict,
}


def parse(text: str, kind: str):
    """Inverse of ``emit(result, "json")`` for series and report types."""
    if kind not in _LOADERS:
        raise UnsupportedFormat(f"cannot parse kind {kind!r}")
    return _LOADERS[kind](json.loads(text))
