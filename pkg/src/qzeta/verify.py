"""Identity engine.

Each identity is a pair of independently evaluated sides ``(lhs, rhs)``.  A
case passes on the exact backends when the residual is identically zero and
on the numeric backend when ``|lhs - rhs|`` is below the case tolerance
(``10 * tol`` unless the grid entry overrides it).
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import BackendUnsupported, ConfigInvalid, ParityViolation, QZetaError
from .genocchi import (
    classical_genocchi_poly,
    genocchi_addition_rhs,
    genocchi_poly,
    s_classical,
    s_tilde,
)
from .qcore import QContext, QSeries, numeric_pow, to_fraction, weighted_bracket
from .zeta import _as_mp, neg_int_order, zeta_eval, zeta_neg_int, zeta_value


class IdentityId(str, Enum):
    RECURRENCE = "RECURRENCE"
    DISTRIBUTION_G = "DISTRIBUTION_G"
    ADDITION_EQ10 = "ADDITION_EQ10"
    SYM_ZETA_THM21 = "SYM_ZETA_THM21"
    DIST_ZETA_EQ9 = "DIST_ZETA_EQ9"
    COR22 = "COR22"
    SYM_GEN_THM23 = "SYM_GEN_THM23"
    SYM_S_THM25 = "SYM_S_THM25"
    CLASSICAL_COR26 = "CLASSICAL_COR26"
    INTERPOLATION = "INTERPOLATION"
    FUNCEQ = "FUNCEQ"


@dataclass(frozen=True)
class IdentityInfo:
    description: str
    odd: tuple[str, ...] = ()
    backends: tuple[str, ...] = ("exact", "rational", "numeric")
    soft: bool = False


IDENTITIES = {
    IdentityId.RECURRENCE: IdentityInfo(
        "q^h G_{m+1}(1)/(m+1) + G_{m+1}(0)/(m+1) = [2]_q [m = 0]"),
    IdentityId.DISTRIBUTION_G: IdentityInfo(
        "G_{n+1,q}(x) = [2]_q/[2]_{q^a} [a]^n sum_j (-1)^j q^{jh} G_{n+1,q^a}((x+j)/a)", odd=("a",)),
    IdentityId.ADDITION_EQ10: IdentityInfo(
        "G_n(x+y) = sum_j C(n,j) q^{alpha(j-1)y} G_j(x) [y]^{n-j}"),
    IdentityId.SYM_ZETA_THM21: IdentityInfo(
        "symmetry of the zeta function in (a, b)", odd=("a", "b")),
    IdentityId.DIST_ZETA_EQ9: IdentityInfo(
        "zeta_q(s, ax) as a twisted sum of zeta_{q^a}(s, x + i/a)", odd=("a",)),
    IdentityId.COR22: IdentityInfo(
        "zeta distribution relation at a = 2", soft=True),
    IdentityId.SYM_GEN_THM23: IdentityInfo(
        "symmetry of the Genocchi polynomials in (a, b)", odd=("a", "b")),
    IdentityId.SYM_S_THM25: IdentityInfo(
        "symmetry of Genocchi x twisted power sums in (a, b)", odd=("a", "b")),
    IdentityId.CLASSICAL_COR26: IdentityInfo(
        "classical symmetry of G_i(bx) S_{m-i}(a) sums", odd=("a", "b"), backends=("exact",)),
    IdentityId.INTERPOLATION: IdentityInfo(
        "zeta(-n, x) = G_{n+1}(x)/(n+1)", backends=("numeric",)),
    IdentityId.FUNCEQ: IdentityInfo(
        "zeta(s, x) + q^h zeta(s, x+1) = [2]_q [x]^{-s}"),
}

# component zeta values are summed this much tighter than the case tolerance
_COMPONENT_TOL = Fraction(1, 1000)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Case:
    params: dict
    backend: str
    residual: str
    passed: bool
    status: str = "pass"
    gated: bool = True

    def to_dict(self) -> dict:
        return {"params": self.params, "backend": self.backend, "residual": self.residual,
                "pass": self.passed, "status": self.status, "gated": self.gated}

    @classmethod
    def from_dict(cls, d: dict) -> "Case":
        return cls(d["params"], d["backend"], d["residual"], d["pass"], d["status"], d["gated"])


@dataclass
class IdentityReport:
    identity: str
    cases: list[Case] = field(default_factory=list)
    variant: str = ""

    @property
    def summary(self) -> dict:
        judged = [c for c in self.cases if c.status != "skipped-invalid"]
        residuals = [Fraction(c.residual) for c in judged if c.residual not in ("", "nan")]
        return {
            "total": len(self.cases),
            "passed": sum(c.passed for c in judged),
            "failed": sum(not c.passed for c in judged),
            "skipped": len(self.cases) - len(judged),
            "max_residual": _fmt_residual(max(residuals)) if residuals else "0",
        }

    @property
    def gate_pass(self) -> bool:
        return all(c.passed for c in self.cases if c.gated and c.status != "skipped-invalid")

    def to_dict(self) -> dict:
        return {"id": self.identity, "variant": self.variant,
                "cases": [c.to_dict() for c in self.cases], "summary": self.summary}

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityReport":
        return cls(d["id"], [Case.from_dict(c) for c in d["cases"]], d.get("variant", ""))


@dataclass
class SuiteReport:
    suite: str
    identities: list[IdentityReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.gate_pass for r in self.identities)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "identities": [r.to_dict() for r in self.identities],
                "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteReport":
        return cls(d["suite"], [IdentityReport.from_dict(r) for r in d["identities"]])

    @classmethod
    def from_json(cls, s: str) -> "SuiteReport":
        return cls.from_dict(json.loads(s))


def _fmt_residual(r) -> str:
    if isinstance(r, Fraction):
        return str(r) if r.denominator == 1 else format_decimal(r)
    return str(r)


def format_decimal(r: Fraction, digits: int = 6) -> str:
    """Short scientific rendering of a positive rational (residual summaries)."""
    if r == 0:
        return "0"
    e = math.floor(math.log10(abs(r.numerator)) - math.log10(r.denominator))
    m = r / Fraction(10) ** e
    while abs(m) >= 10:
        m /= 10
        e += 1
    while abs(m) < 1:
        m *= 10
        e -= 1
    return f"{float(m):.{digits}f}e{e:+d}"


def _jsonable(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return str(v)


# ---------------------------------------------------------------------------
# identity sides


def _pow_s(v, s, ctx):
    """``v ** s`` for a real/complex ``s`` (integer powers stay exact)."""
    n = neg_int_order(s)
    if n is not None:
        return v ** (-n)
    if isinstance(s, int) or (isinstance(s, Fraction) and s.denominator == 1):
        return v ** int(s)
    if ctx.backend != "numeric":
        raise BackendUnsupported(f"non-integer s = {s} needs the numeric backend")
    return numeric_pow(v, ctx.num(s) if not isinstance(s, str) else _parse_s(s, ctx), ctx)


def _parse_s(s: str, ctx):
    s = s.strip().replace(" ", "")
    if s.startswith("-(") and s.endswith(")"):
        return -_parse_s(s[2:-1], ctx)
    return _as_mp(s, ctx)


def _zeta(s, x, ctx):
    tol = ctx.tol * _COMPONENT_TOL if ctx.backend == "numeric" else None
    return zeta_value(s, x, ctx, tol=tol)


def _two(ctx, c=1):
    return 1 + ctx.qpow(c)


def _recurrence(p, ctx):
    m = p["m"]
    g1 = genocchi_poly(m + 1, 1, ctx)
    g0 = genocchi_poly(m + 1, 0, ctx)
    lhs = ctx.qpow(ctx.h) * g1 / (m + 1) + g0 / (m + 1)
    rhs = _two(ctx) if m == 0 else ctx.zero()
    return lhs, rhs


def _distribution_g(p, ctx):
    n, a, x = p["n"], p["a"], to_fraction(p["x"])
    lhs = genocchi_poly(n + 1, x, ctx)
    ca = ctx.with_base(a)
    acc = ctx.zero()
    for j in range(a):
        acc = acc + (-1) ** j * ctx.qpow(j * ctx.h) * genocchi_poly(n + 1, (x + j) / a, ca)
    rhs = _two(ctx) / _two(ctx, a) * weighted_bracket(a, ctx) ** n * acc
    return lhs, rhs


def _addition(p, ctx):
    n, x, y = p["n"], to_fraction(p["x"]), to_fraction(p["y"])
    return genocchi_poly(n, x + y, ctx), genocchi_addition_rhs(n, x, y, ctx)


def _zeta_sym_side(a, b, s, x, ctx):
    ca = ctx.with_base(a)
    acc = ctx.zero()
    for i in range(a):
        acc = acc + (-1) ** i * ctx.qpow(i * b * ctx.h) * _zeta(s, b * x + Fraction(b * i, a), ca)
    return _two(ctx, b) * _pow_s(weighted_bracket(a, ctx), _neg(s), ctx) * acc


def _neg(s):
    if isinstance(s, str):
        try:
            return -Fraction(s.strip())
        except ValueError:
            # complex "a+bi": negate both parts
            return "-(" + s.strip() + ")"
    return -s


def _sym_zeta(p, ctx):
    a, b, s, x = p["a"], p["b"], p["s"], to_fraction(p["x"])
    return _zeta_sym_side(a, b, s, x, ctx), _zeta_sym_side(b, a, s, x, ctx)


def _dist_zeta(p, ctx, a=None):
    a = p["a"] if a is None else a
    s, x = p["s"], to_fraction(p["x"])
    lhs = _zeta(s, a * x, ctx)
    ca = ctx.with_base(a)
    acc = ctx.zero()
    for i in range(a):
        acc = acc + (-1) ** i * ctx.qpow(i * ctx.h) * _zeta(s, x + Fraction(i, a), ca)
    rhs = _two(ctx) / _two(ctx, a) * _pow_s(weighted_bracket(a, ctx), _neg(s), ctx) * acc
    return lhs, rhs


def _cor22(p, ctx):
    return _dist_zeta(p, ctx, a=2)


def _gen_sym_side(a, b, m, x, ctx):
    ca = ctx.with_base(a)
    acc = ctx.zero()
    for i in range(a):
        acc = acc + (-1) ** i * ctx.qpow(i * b * ctx.h) * genocchi_poly(m, b * x + Fraction(b * i, a), ca)
    return _two(ctx, b) * weighted_bracket(a, ctx) ** (m - 1) * acc


def _sym_gen(p, ctx):
    a, b, m, x = p["a"], p["b"], p["m"], to_fraction(p["x"])
    return _gen_sym_side(a, b, m, x, ctx), _gen_sym_side(b, a, m, x, ctx)


def _s_sym_side(a, b, m, x, ctx, literal):
    ca, cb = ctx.with_base(a), ctx.with_base(b)
    ba, bb = weighted_bracket(a, ctx), weighted_bracket(b, ctx)
    acc = ctx.zero()
    # i = 0 carries the zeroth Genocchi polynomial, which vanishes
    for i in range(1, m + 1):
        twist = ctx.h + (i - 1 if literal else ctx.alpha * (i - 1))
        acc = acc + comb(m, i) * ba ** (i - 1) * bb ** (m - i) * genocchi_poly(i, b * x, ca) \
            * s_tilde(m - i, a, twist, cb)
    return _two(ctx, b) * acc


def _sym_s(p, ctx, literal=False):
    a, b, m, x = p["a"], p["b"], p["m"], to_fraction(p["x"])
    return _s_sym_side(a, b, m, x, ctx, literal), _s_sym_side(b, a, m, x, ctx, literal)


def _classical_side(a, b, m, x):
    return sum(comb(m, i) * Fraction(a) ** (i - 1) * Fraction(b) ** (m - i)
               * classical_genocchi_poly(i, b * x) * s_classical(m - i, a)
               for i in range(m + 1))


def _classical(p, ctx):
    a, b, m, x = p["a"], p["b"], p["m"], to_fraction(p["x"])
    return _classical_side(a, b, m, x), _classical_side(b, a, m, x)


def _interpolation(p, ctx):
    n, x = p["n"], to_fraction(p["x"])
    tol = ctx.tol * _COMPONENT_TOL
    return zeta_eval(-n, x, ctx, tol=tol), zeta_neg_int(n, x, ctx)


def _funceq(p, ctx):
    s, x = p["s"], to_fraction(p["x"])
    lhs = _zeta(s, x, ctx) + ctx.qpow(ctx.h) * _zeta(s, x + 1, ctx)
    n = neg_int_order(s)
    bx = weighted_bracket(x, ctx)
    rhs = _two(ctx) * (bx ** n if n is not None else _pow_s(bx, _neg(s), ctx))
    return lhs, rhs


_SIDES = {
    IdentityId.RECURRENCE: _recurrence,
    IdentityId.DISTRIBUTION_G: _distribution_g,
    IdentityId.ADDITION_EQ10: _addition,
    IdentityId.SYM_ZETA_THM21: _sym_zeta,
    IdentityId.DIST_ZETA_EQ9: _dist_zeta,
    IdentityId.COR22: _cor22,
    IdentityId.SYM_GEN_THM23: _sym_gen,
    IdentityId.SYM_S_THM25: _sym_s,
    IdentityId.CLASSICAL_COR26: _classical,
    IdentityId.INTERPOLATION: _interpolation,
    IdentityId.FUNCEQ: _funceq,
}


# ---------------------------------------------------------------------------
# grids and case evaluation


def expand_grid(grid) -> list[dict]:
    """Cartesian expansion in key order; a key ``"a,b"`` takes a list of tuples."""
    if grid is None:
        return [{}]
    if isinstance(grid, list):
        return [dict(g) for g in grid]
    keys = list(grid)
    out = []
    for combo in itertools.product(*(grid[k] for k in keys)):
        case = {}
        for k, v in zip(keys, combo):
            if "," in k:
                names = [n.strip() for n in k.split(",")]
                if len(names) != len(v):
                    raise ConfigInvalid(f"grid key {k!r} needs tuples of length {len(names)}")
                case.update(zip(names, v))
            else:
                case[k] = v
        out.append(case)
    return out


def _case_context(params: dict, ctx: QContext) -> QContext:
    alpha = to_fraction(params.get("alpha", ctx.alpha)) if not hasattr(ctx.alpha, "_mpf_") \
        else params.get("alpha", ctx.alpha)
    h = int(params.get("h", ctx.h))
    changes = {"alpha": alpha, "h": h}
    if ctx.backend == "exact":
        dens = [to_fraction(params[k]).denominator for k in ("x", "y") if k in params]
        scale = math.lcm(*dens, 1) * alpha.denominator
        changes["scale"] = max(ctx.scale, scale)
    return ctx.replace(**changes)


def _residual(lhs, rhs, relative: bool):
    diff = lhs - rhs
    if isinstance(diff, QSeries):
        return diff.max_abs_coeff()
    if isinstance(diff, (Fraction, int)):
        r = abs(Fraction(diff))
        if relative and rhs != 0:
            r /= abs(Fraction(rhs))
        return r
    r = abs(diff)
    if relative and rhs != 0:
        r = r / abs(rhs)
    return r


def _numeric_str(r, ctx) -> str:
    return ctx.mp.nstr(r, ctx.mp.dps, min_fixed=1, max_fixed=0) if r != 0 else "0"


def check_case(identity: IdentityId, params: dict, ctx: QContext, literal: bool = False,
               gate=None) -> Case:
    """Evaluate one case; raises ParityViolation / BackendUnsupported on invalid input."""
    identity = IdentityId(identity)
    info = IDENTITIES[identity]
    for name in info.odd:
        if name in params and params[name] % 2 == 0:
            raise ParityViolation(f"{identity.value} needs odd {name}, got {params[name]}")
    if ctx.backend not in info.backends:
        raise BackendUnsupported(f"{identity.value} does not run on the {ctx.backend} backend")
    cctx = _case_context(params, ctx)
    if identity is IdentityId.SYM_S_THM25:
        lhs, rhs = _sym_s(params, cctx, literal)
    else:
        lhs, rhs = _SIDES[identity](params, cctx)
    relative = identity is IdentityId.INTERPOLATION
    r = _residual(lhs, rhs, relative)
    shown = {k: _jsonable(v) for k, v in params.items()}
    if ctx.backend == "numeric":
        limit = ctx.num(to_fraction(gate) if gate is not None else 10 * ctx.tol)
        ok = bool(r < limit)
        res = _numeric_str(r, ctx)
    else:
        ok = r == 0
        res = _fmt_residual(r)
    return Case(shown, ctx.backend, res, ok, "pass" if ok else "fail", gated=not info.soft)


def _run_case(job):
    identity, params, ctx, literal, gate, on_invalid = job
    try:
        return check_case(identity, params, ctx, literal, gate)
    except (ParityViolation, BackendUnsupported):
        if on_invalid == "raise":
            raise
        shown = {k: _jsonable(v) for k, v in params.items()}
        return Case(shown, ctx.backend, "", False, "skipped-invalid", gated=False)


def verify_identity(identity, grid, ctx: QContext, *, literal: bool = False, gate=None,
                    on_invalid: str = "raise", soft: bool | None = None,
                    jobs: int = 1) -> IdentityReport:
    """Evaluate every case of ``grid`` for one identity, in grid order."""
    identity = IdentityId(identity)
    jobs_list = [(identity, p, ctx, literal, gate, on_invalid) for p in expand_grid(grid)]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cases = list(pool.map(_run_case, jobs_list))
    else:
        cases = [_run_case(j) for j in jobs_list]
    if soft is not None:
        for c in cases:
            if c.status != "skipped-invalid":
                c.gated = not soft
    variant = ""
    if identity is IdentityId.SYM_S_THM25:
        variant = "literal" if literal else "derived"
    return IdentityReport(identity.value, cases, variant)


# ---------------------------------------------------------------------------
# suites


@dataclass
class SuiteEntry:
    identity: IdentityId
    grid: object
    backend: str = "exact"
    literal: bool = False
    soft: bool | None = None
    gate: object = None


@dataclass
class SuiteConfig:
    name: str
    entries: list[SuiteEntry] = field(default_factory=list)
    order: int = 64
    prec: int = 128
    tol: Fraction = Fraction(1, 10**30)
    q: Fraction = Fraction(1, 2)


ODD_PAIRS = [(1, 1), (1, 3), (3, 5), (3, 7), (5, 7)]


def default_suite(thm25_literal: bool = False, order: int = 64, prec: int = 128,
                  tol=Fraction(1, 10**30), q=Fraction(1, 2)) -> SuiteConfig:
    """All eleven identities at desk scale."""
    ah = {"alpha": [1, 2], "h": [1, 2]}
    zs = {"s": ["1.5", "2.5", "4.0"], "x": [1, 2]}
    E = []
    E.append(SuiteEntry(IdentityId.RECURRENCE, {"m": list(range(13)), **ah}))
    E.append(SuiteEntry(IdentityId.DISTRIBUTION_G,
                        {"a": [1, 3, 5], "n": list(range(9)), "x": [0, 1, 2], **ah}))
    E.append(SuiteEntry(IdentityId.ADDITION_EQ10,
                        {"n": list(range(9)), "x": [0, 1, 2, 3], "y": [0, 1, 2, 3], **ah}))
    E.append(SuiteEntry(IdentityId.ADDITION_EQ10,
                        {"n": list(range(9)), "x": [0, 1], "y": ["1/2", "3/2"],
                         "alpha": [1], "h": [1]}, backend="numeric"))
    E.append(SuiteEntry(IdentityId.SYM_ZETA_THM21,
                        {"a,b": [(1, 3), (3, 5)], **zs, "alpha": [1], "h": [1]},
                        backend="numeric"))
    E.append(SuiteEntry(IdentityId.DIST_ZETA_EQ9,
                        {"a": [1, 3, 5], **zs, "alpha": [1], "h": [1]}, backend="numeric"))
    E.append(SuiteEntry(IdentityId.COR22, {**zs, "alpha": [1], "h": [1]}, backend="numeric"))
    E.append(SuiteEntry(IdentityId.SYM_GEN_THM23,
                        {"a,b": ODD_PAIRS, "m": list(range(9)), "x": [0, 1, 2], **ah}))
    s25 = {"a,b": [(1, 3), (3, 5)], "m": list(range(7)), "x": [0, 1], **ah}
    if thm25_literal:
        E.append(SuiteEntry(IdentityId.SYM_S_THM25, s25, literal=True))
    else:
        E.append(SuiteEntry(IdentityId.SYM_S_THM25, s25))
        E.append(SuiteEntry(IdentityId.SYM_S_THM25, s25, literal=True, soft=True))
    E.append(SuiteEntry(IdentityId.CLASSICAL_COR26,
                        {"a,b": [(a, b) for a in (1, 3, 5, 7) for b in (1, 3, 5, 7) if a < b],
                         "m": list(range(11)), "x": [0, "1/2", 1]}))
    E.append(SuiteEntry(IdentityId.INTERPOLATION,
                        {"n": list(range(7)), "x": [0, 1, 2], "alpha": [1], "h": [1]},
                        backend="numeric"))
    E.append(SuiteEntry(IdentityId.FUNCEQ, {**zs, "alpha": [1], "h": [1]}, backend="numeric"))
    return SuiteConfig("default", E, order=order, prec=prec, tol=tol, q=q)


def smoke_suite(**kw) -> SuiteConfig:
    """A few cases of every identity (seconds)."""
    E = [
        SuiteEntry(IdentityId.RECURRENCE, {"m": [0, 1, 4], "alpha": [1, 2], "h": [1]}),
        SuiteEntry(IdentityId.DISTRIBUTION_G, {"a": [3], "n": [3], "x": [1], "alpha": [1], "h": [1]}),
        SuiteEntry(IdentityId.ADDITION_EQ10, {"n": [4], "x": [1], "y": [2], "alpha": [2], "h": [1]}),
        SuiteEntry(IdentityId.SYM_ZETA_THM21, {"a,b": [(1, 3)], "s": ["2.5"], "x": [1]},
                   backend="numeric"),
        SuiteEntry(IdentityId.DIST_ZETA_EQ9, {"a": [3], "s": ["2.5"], "x": [1]}, backend="numeric"),
        SuiteEntry(IdentityId.COR22, {"s": ["2.5"], "x": [1]}, backend="numeric"),
        SuiteEntry(IdentityId.SYM_GEN_THM23, {"a,b": [(3, 5)], "m": [4], "x": [1]}),
        SuiteEntry(IdentityId.SYM_S_THM25, {"a,b": [(1, 3)], "m": [3], "x": [1], "alpha": [2]}),
        SuiteEntry(IdentityId.CLASSICAL_COR26, {"a,b": [(3, 5)], "m": [5], "x": ["1/2"]}),
        SuiteEntry(IdentityId.INTERPOLATION, {"n": [2], "x": [1]}, backend="numeric"),
        SuiteEntry(IdentityId.FUNCEQ, {"s": ["2.5"], "x": [1]}, backend="numeric"),
    ]
    base = default_suite(**kw)
    return SuiteConfig("smoke", E, order=base.order, prec=base.prec, tol=base.tol, q=base.q)


SUITES = {"default": default_suite, "smoke": smoke_suite}


def suite_by_name(name: str, **kw) -> SuiteConfig:
    if name not in SUITES:
        raise ConfigInvalid(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kw)


def _entry_context(entry: SuiteEntry, config: SuiteConfig) -> QContext:
    if entry.backend == "exact":
        return QContext(backend="exact", order=config.order)
    if entry.backend == "numeric":
        return QContext(backend="numeric", q=config.q, prec=config.prec, tol=config.tol)
    if entry.backend == "rational":
        return QContext(backend="rational", q=config.q)
    raise ConfigInvalid(f"unknown backend {entry.backend!r}")


def run_suite(config: SuiteConfig, identities=None, jobs: int = 1) -> SuiteReport:
    """Run every entry (optionally restricted to ``identities``) in declaration order."""
    if not isinstance(config, SuiteConfig):
        raise ConfigInvalid("run_suite needs a SuiteConfig")
    wanted = None if identities is None else {IdentityId(i) for i in identities}
    report = SuiteReport(config.name)
    for entry in config.entries:
        if wanted is not None and entry.identity not in wanted:
            continue
        ctx = _entry_context(entry, config)
        try:
            rep = verify_identity(entry.identity, entry.grid, ctx, literal=entry.literal,
                                  gate=entry.gate, on_invalid="skip", soft=entry.soft, jobs=jobs)
        except QZetaError as exc:
            raise ConfigInvalid(f"{entry.identity.value}: {exc}") from exc
        report.identities.append(rep)
    return report
