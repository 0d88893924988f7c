"""Finite-level p-adic q-integrals.

Level sums are computed in exact rational arithmetic (GMP integers through
gmpy2) and only afterwards reduced p-adically.  The integrand family is fixed:
``f(xi) = q^{(h-1) xi} [x + xi]_{q^alpha}^degree`` with integer ``x`` and
rational ``q`` satisfying ``v_p(1 - q) >= 1``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpq, mpz

from .errors import (
    InvalidPrime,
    LevelTooLarge,
    QNotPadicallyClose,
    ResidueOutOfRange,
)
from .genocchi import genocchi_poly
from .qcore import QContext, rational_from_str, rational_to_str, to_fraction

INF = math.inf
MAX_POINTS = 10**6


def _check_prime(p: int):
    if not isinstance(p, int) or p < 3 or not gmpy2.is_prime(p):
        raise InvalidPrime(f"{p} is not an odd prime")


def _int_vp(n, p) -> int:
    return int(gmpy2.remove(mpz(n), p)[1])


def vp(r, p: int) -> float | int:
    """p-adic valuation of a rational (``inf`` for zero)."""
    _check_prime(p)
    r = mpq(r.numerator, r.denominator) if not isinstance(r, type(mpq())) else r
    if r == 0:
        return INF
    return _int_vp(r.numerator, p) - _int_vp(r.denominator, p)


def padic_abs(r, p: int) -> Fraction:
    v = vp(r, p)
    return Fraction(0) if v == INF else Fraction(p) ** (-v)


@dataclass(frozen=True)
class PadicNumber:
    """``p^v * u`` with ``u`` a unit known modulo ``p^N`` (``zero`` flags the value 0)."""

    p: int
    N: int
    v: int
    u: int
    zero: bool = False

    def __post_init__(self):
        _check_prime(self.p)
        if not self.zero and self.u % self.p == 0:
            raise ValueError("unit part must be prime to p")

    def digits(self) -> list[int]:
        """Base-p digits of the unit part, least significant first."""
        out, u = [], self.u
        for _ in range(self.N):
            u, d = divmod(u, self.p)
            out.append(d)
        return out


def padic_reduce(r, p: int, N: int) -> PadicNumber:
    _check_prime(p)
    if N < 1:
        raise ValueError("N must be >= 1")
    r = to_fraction(r)
    if r == 0:
        return PadicNumber(p, N, 0, 0, zero=True)
    v = vp(r, p)
    unit = r / Fraction(p) ** v
    mod = p**N
    u = unit.numerator * pow(unit.denominator, -1, mod) % mod
    return PadicNumber(p, N, v, u)


def _check_q(q: Fraction, p: int):
    if q == 1:
        raise QNotPadicallyClose("q = 1 gives a degenerate measure")
    if vp(1 - q, p) < 1:
        raise QNotPadicallyClose(f"v_p(1 - q) = {vp(1 - q, p)} < 1")


def qhaar_measure(a: int, n: int, p: int, q) -> Fraction:
    """``mu_q(a + p^n Z_p) = q^a / [p^n]_q``."""
    _check_prime(p)
    q = to_fraction(q)
    _check_q(q, p)
    if not 0 <= a < p**n:
        raise ResidueOutOfRange(f"residue {a} outside [0, {p}^{n})")
    return q**a / ((1 - q ** (p**n)) / (1 - q))


@dataclass(frozen=True)
class IntegrandSpec:
    """``f(xi) = q^{(h-1) xi} [x + xi]_{q^alpha}^degree``."""

    degree: int
    x: int = 0
    alpha: int = 1
    h: int = 1

    def __post_init__(self):
        if self.degree < 0 or self.alpha < 1 or self.h < 0:
            raise ValueError("need degree >= 0, alpha >= 1, h >= 0")
        if int(self.x) != self.x or self.x < 0:
            raise ValueError("shift x must be a non-negative integer")


def _level_points(n: int, p: int) -> int:
    pts = p**n
    if pts > MAX_POINTS:
        raise LevelTooLarge(f"{p}^{n} points exceed the cap of {MAX_POINTS}")
    return pts


def _weighted_sum(spec: IntegrandSpec, pts: int, q: mpq, sign: int, hexp: int) -> mpq:
    """``sum_{xi < pts} sign^xi q^{hexp xi} [x + xi]_{q^alpha}^degree`` in exact arithmetic."""
    qa = q**spec.alpha
    if q.denominator == 1:
        # integer q: [y]_{q^a} = (qa^y - 1)/(qa - 1) is an integer
        # reverse Horner in the small factor sign * q^hexp keeps every product big x small
        qi, qai = mpz(q.numerator), mpz(qa.numerator)
        d = qai - 1
        qay = qai ** (spec.x + pts - 1)
        step = sign * qi**hexp
        acc = mpz(0)
        for _ in range(pts):
            acc = acc * step + ((qay - 1) // d) ** spec.degree
            qay //= qai
        return mpq(acc)
    qay = qa**spec.x
    w = mpq(1)
    step = q**hexp
    total = mpq(0)
    for xi in range(pts):
        t = w * ((1 - qay) / (1 - qa)) ** spec.degree
        total += -t if (sign < 0 and xi & 1) else t
        qay *= qa
        w *= step
    return total


def bosonic_level_integral(spec: IntegrandSpec, n: int, p: int, q) -> Fraction:
    """Level-n Riemann sum ``(1/[p^n]_q) sum_{xi<p^n} f(xi) q^xi``."""
    _check_prime(p)
    q = to_fraction(q)
    _check_q(q, p)
    pts = _level_points(n, p)
    mq = mpq(q.numerator, q.denominator)
    val = _weighted_sum(spec, pts, mq, +1, spec.h) * (1 - mq) / (1 - mq**pts)
    return Fraction(int(val.numerator), int(val.denominator))


@lru_cache(maxsize=256)
def fermionic_level_integral(spec: IntegrandSpec, n: int, p: int, q) -> Fraction:
    """Level-n fermionic sum ``(1/[p^n]_{-q}) sum_{xi<p^n} (-1)^xi q^{h xi} [x+xi]_{q^alpha}^degree``."""
    _check_prime(p)
    q = to_fraction(q)
    _check_q(q, p)
    pts = _level_points(n, p)
    mq = mpq(q.numerator, q.denominator)
    # [p^n]_{-q} = (1 + q^{p^n}) / (1 + q) for odd p^n
    val = _weighted_sum(spec, pts, mq, -1, spec.h) * (1 + mq) / (1 + mq**pts)
    return Fraction(int(val.numerator), int(val.denominator))


def fermionic_target(spec: IntegrandSpec, q) -> Fraction:
    """Limit of the fermionic level sums: the Genocchi closed form over ``degree + 1``."""
    ctx = QContext(alpha=spec.alpha, h=spec.h, backend="rational", q=to_fraction(q))
    return genocchi_poly(spec.degree + 1, spec.x, ctx) / (spec.degree + 1)


def _diff_vp(a: Fraction, b: Fraction, p: int):
    return vp(a - b, p)


def _vstr(v):
    if v is None:
        return None
    return "inf" if v == INF else int(v)


def _vparse(v):
    return INF if v == "inf" else v


@dataclass
class LevelRow:
    N: int
    value: Fraction
    diff_valuation: float | int | None
    target_valuation: float | int


@dataclass
class Report:
    """Cauchy data of the fermionic level sums for one integrand."""

    p: int
    q: Fraction
    degree: int
    x: int
    alpha: int
    h: int
    loss: int
    levels: list[LevelRow] = field(default_factory=list)
    target: Fraction = Fraction(0)
    verdict: str = ""

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": rational_to_str(self.q),
            "degree": self.degree,
            "x": self.x,
            "alpha": self.alpha,
            "h": self.h,
            "loss": self.loss,
            "levels": [
                {"N": r.N, "value": rational_to_str(r.value),
                 "diff_valuation": _vstr(r.diff_valuation),
                 "target_valuation": _vstr(r.target_valuation)}
                for r in self.levels
            ],
            "target": rational_to_str(self.target),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        levels = [LevelRow(r["N"], rational_from_str(r["value"]), _vparse(r["diff_valuation"]),
                           _vparse(r["target_valuation"])) for r in d["levels"]]
        return cls(d["p"], Fraction(d["q"]), d["degree"], d["x"], d["alpha"], d["h"], d["loss"],
                   levels, rational_from_str(d["target"]), d["verdict"])

    @classmethod
    def from_json(cls, s: str) -> "Report":
        return cls.from_dict(json.loads(s))

    @property
    def diff_valuations(self) -> list:
        return [r.diff_valuation for r in self.levels[1:]]

    def monotone(self) -> bool:
        v = self.diff_valuations
        return all(a <= b for a, b in zip(v, v[1:]))

    def within_bound(self) -> bool:
        """``v_p(level_N - target) >= N - loss`` at every level."""
        return all(r.target_valuation >= r.N - self.loss for r in self.levels)


def convergence_report(spec: IntegrandSpec, p: int, q, N_max: int) -> Report:
    """Fermionic level sums for ``N = 1..N_max`` with valuations of successive
    differences (``diff_valuation`` is ``None`` at ``N = 1``) and of the distance
    to the closed-form target.  ``loss = degree * v_p(1 - q^alpha)`` digits."""
    _check_prime(p)
    if not 1 <= N_max <= 6:
        raise ValueError("N_max must be in 1..6")
    q = to_fraction(q)
    _check_q(q, p)
    target = fermionic_target(spec, q)
    loss = spec.degree * int(vp(1 - q**spec.alpha, p))
    rows = []
    prev = None
    for N in range(1, N_max + 1):
        val = fermionic_level_integral(spec, N, p, q)
        dv = _diff_vp(val, prev, p) if prev is not None else None
        rows.append(LevelRow(N, val, dv, _diff_vp(val, target, p)))
        prev = val
    rep = Report(p, q, spec.degree, int(spec.x), spec.alpha, spec.h, loss, rows, target)
    rep.verdict = "cauchy" if rep.monotone() and rep.within_bound() else "irregular"
    return rep
