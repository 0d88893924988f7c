"""Arithmetic substrate: truncated q-series, evaluation contexts and q-brackets.

Three evaluation backends share one calling convention, so the Genocchi and
zeta formulas are written once:

``exact``
    values are :class:`QSeries`, truncated power series in ``t`` with
    ``q = t**scale`` and exact rational coefficients.
``rational``
    values are :class:`fractions.Fraction`, the formulas evaluated at a fixed
    rational ``q`` (integer exponents only).
``numeric``
    values are mpmath numbers at a configurable binary precision.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import gmpy2
import mpmath

from .errors import (
    NegativeExponent,
    NegativeExponentInExactBackend,
    NonUnitConstantTerm,
    OrderMismatch,
    QOutOfDomain,
    ScaleMismatch,
    ScaleOverflow,
    ZeroBase,
)

DEFAULT_ORDER = 64
DEFAULT_PREC = 128
DEFAULT_TOL = Fraction(1, 10**30)
BACKENDS = ("exact", "rational", "numeric")


def to_fraction(value) -> Fraction:
    """Exact conversion of ints, Fractions, floats and ``"p/q"``/decimal strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def rational_to_str(r) -> str:
    """``"p/q"`` (or ``"p"``) without the interpreter's integer-string length cap."""
    r = Fraction(r)
    num = str(gmpy2.mpz(r.numerator))
    return num if r.denominator == 1 else f"{num}/{gmpy2.mpz(r.denominator)}"


def rational_from_str(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        n, d = s.split("/", 1)
        return Fraction(int(gmpy2.mpz(n.strip())), int(gmpy2.mpz(d.strip())))
    if any(c in s for c in ".eE"):
        return Fraction(s)
    return Fraction(int(gmpy2.mpz(s)))


@lru_cache(maxsize=None)
def numeric_context(prec: int = DEFAULT_PREC) -> mpmath.ctx_mp.MPContext:
    """A private mpmath context fixed at ``prec`` bits (never mutated afterwards)."""
    if prec < 53:
        raise ValueError("precision must be at least 53 bits")
    mp = mpmath.MPContext()
    mp.prec = prec
    return mp


# ---------------------------------------------------------------------------
# integer-vector kernels


def _kron_mul(a: list[int], b: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer coefficient lists.

    Kronecker substitution: both operands are packed into one big integer at
    radix ``2**bits`` and multiplied with the interpreter's bignum multiply.
    """
    a = a[:n]
    b = b[:n]
    ma = max(map(abs, a), default=0)
    mb = max(map(abs, b), default=0)
    if ma == 0 or mb == 0:
        return [0] * n
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * nbytes
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    half = 1 << (bits - 1)
    # offset every digit by 2**(bits-1) so each lands in [1, 2**bits) without carries
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    w = (prod + offset) & ((1 << (bits * n)) - 1)
    raw = w.to_bytes(nbytes * n, "little")
    return [
        int.from_bytes(raw[i : i + nbytes], "little") - half
        for i in range(0, nbytes * n, nbytes)
    ]


def _pack(coeffs: list[int], nbytes: int) -> int:
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _normalize(nums: list[int], den: int) -> tuple[list[int], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g > 1:
        nums = [c // g for c in nums]
        den //= g
    return nums, den


# ---------------------------------------------------------------------------
# truncated series


class QSeries:
    """Truncated formal power series ``sum_e c_e t**e`` for ``e <= order``.

    The series variable is ``t`` with ``q = t**scale``, so ``q**(e/scale)`` is
    stored at integer index ``e``.  Coefficients are exact rationals held as an
    integer vector over one common positive denominator.  Instances are
    immutable.
    """

    __slots__ = ("scale", "order", "_num", "_den")

    def __init__(self, coeffs=(), scale: int = 1, order: int | None = None):
        fr = [to_fraction(c) for c in coeffs]
        if order is None:
            order = max(len(fr) - 1, 1)
        _check_shape(scale, order)
        fr = (fr + [Fraction(0)] * (order + 1))[: order + 1]
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        nums = [f.numerator * (den // f.denominator) for f in fr]
        self._set(*_normalize(nums, den), scale, order)

    def _set(self, nums, den, scale, order):
        object.__setattr__(self, "_num", tuple(nums))
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @classmethod
    def _make(cls, nums, den, scale, order) -> "QSeries":
        obj = cls.__new__(cls)
        obj._set(*_normalize(list(nums), den), scale, order)
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, scale: int = 1, order: int = DEFAULT_ORDER) -> "QSeries":
        _check_shape(scale, order)
        return cls._make([0] * (order + 1), 1, scale, order)

    @classmethod
    def constant(cls, c, scale: int = 1, order: int = DEFAULT_ORDER) -> "QSeries":
        c = to_fraction(c)
        _check_shape(scale, order)
        nums = [0] * (order + 1)
        nums[0] = c.numerator
        return cls._make(nums, c.denominator, scale, order)

    @classmethod
    def monomial(cls, e: int, scale: int = 1, order: int = DEFAULT_ORDER, coeff=1) -> "QSeries":
        if e < 0:
            raise NegativeExponent(f"monomial exponent {e} < 0")
        _check_shape(scale, order)
        c = to_fraction(coeff)
        nums = [0] * (order + 1)
        if e <= order:
            nums[e] = c.numerator
        return cls._make(nums, c.denominator, scale, order)

    # -- views --------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    def __getitem__(self, e: int) -> Fraction:
        return Fraction(self._num[e], self._den)

    def __len__(self):
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self._num)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` for the zero series."""
        for e, c in enumerate(self._num):
            if c:
                return e
        return None

    def max_abs_coeff(self) -> Fraction:
        return Fraction(max(map(abs, self._num)), self._den)

    # -- structural ---------------------------------------------------------

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return QSeries._make(self._num[: order + 1], self._den, self.scale, order)

    def rescale(self, scale: int) -> "QSeries":
        """Re-express over ``q = t**scale``; requires ``self.scale | scale``."""
        if scale % self.scale:
            raise ScaleMismatch(f"scale {self.scale} does not divide {scale}")
        r = scale // self.scale
        nums = [0] * (self.order + 1)
        for e, c in enumerate(self._num):
            if e * r > self.order:
                break
            nums[e * r] = c
        return QSeries._make(nums, self._den, scale, self.order)

    def shift(self, e: int, coeff=1) -> "QSeries":
        """Multiply by ``coeff * t**e``."""
        if e < 0:
            raise NegativeExponent(f"shift {e} < 0")
        c = to_fraction(coeff)
        n = self.order + 1
        nums = [0] * e + [x * c.numerator for x in self._num]
        return QSeries._make(nums[:n] + [0] * max(0, n - len(nums)), self._den * c.denominator,
                             self.scale, self.order)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            if other.scale != self.scale:
                raise ScaleMismatch(f"scales {self.scale} and {other.scale} differ")
            if other.order != self.order:
                raise OrderMismatch(f"orders {self.order} and {other.order} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries.constant(other, self.scale, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self._den, other._den
        l = da // math.gcd(da, db) * db
        fa, fb = l // da, l // db
        return QSeries._make([x * fa + y * fb for x, y in zip(self._num, other._num)], l,
                             self.scale, self.order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._make([-x for x in self._num], self._den, self.scale, self.order)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QSeries._make([x * c.numerator for x in self._num], self._den * c.denominator,
                                 self.scale, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        for a, b in ((self, other), (other, self)):
            support = [e for e, c in enumerate(a._num) if c]
            if len(support) <= 1:
                if not support:
                    return QSeries.zero(self.scale, self.order)
                e = support[0]
                return b.shift(e, Fraction(a._num[e], a._den))
        nums = _kron_mul(list(self._num), list(other._num), self.order + 1)
        return QSeries._make(nums, self._den * other._den, self.scale, self.order)

    __rmul__ = __mul__

    def inv(self) -> "QSeries":
        """Multiplicative inverse; the constant coefficient must be nonzero."""
        n0 = self._num[0]
        if n0 == 0:
            raise NonUnitConstantTerm("series has zero constant term")
        n = self.order + 1
        support = [e for e, c in enumerate(self._num) if c]
        if len(support) <= 2:
            # c0 + c_j t^j  ->  geometric series
            nums = [0] * n
            if len(support) == 1:
                nums[0] = 1
                return QSeries._make(nums, n0, self.scale, self.order) * self._den
            j = support[1]
            r = Fraction(-self._num[j], n0)
            den = r.denominator ** (self.order // j)
            term = den
            for k in range(0, self.order // j + 1):
                nums[k * j] = term
                term = term * r.numerator // r.denominator
            return QSeries._make(nums, den * n0, self.scale, self.order) * self._den
        # Newton iteration b <- b (2 - a b) on integer vectors with a common denominator
        a = list(self._num)
        b, bd = [1], n0
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            e = _kron_mul(a, b, prec)
            r = [-c for c in e]
            r[0] += 2 * bd
            b = _kron_mul(b, r, prec)
            b, bd = _normalize(b, bd * bd)
        return QSeries._make(b + [0] * (n - len(b)), bd, self.scale, self.order) * self._den

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inv(), -k
        result = QSeries.constant(1, self.scale, self.order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.scale, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.scale, self.order, self._num, self._den) == (
            other.scale, other.order, other._num, other._den)

    def __hash__(self):
        return hash((self.scale, self.order, self._num, self._den))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"scale": self.scale, "order": self.order,
                "coeffs": [rational_to_str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "QSeries":
        return cls([rational_from_str(c) for c in d["coeffs"]], scale=d["scale"], order=d["order"])

    @classmethod
    def from_json(cls, s: str) -> "QSeries":
        return cls.from_dict(json.loads(s))

    def __repr__(self):
        return f"QSeries({self}, scale={self.scale}, order={self.order})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            ex = Fraction(e, self.scale)
            mono = "" if ex == 0 else ("q" if ex == 1 else f"q^{ex}" if ex.denominator == 1
                                       else f"q^({ex})")
            if not mono:
                terms.append(rational_to_str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        top = Fraction(self.order + 1, self.scale)
        return f"{body} + O(q^{top if top.denominator == 1 else f'({top})'})"


def _check_shape(scale, order):
    if scale < 1:
        raise ScaleMismatch(f"scale must be >= 1, got {scale}")
    if order < 1:
        raise OrderMismatch(f"order must be >= 1, got {order}")


def series_monomial(e: int, scale: int = 1, order: int = DEFAULT_ORDER) -> QSeries:
    return QSeries.monomial(e, scale, order)


def series_arith(op: str, a: QSeries, b=None) -> QSeries:
    """Dispatch ``add``, ``neg``, ``mul``, ``inv`` or ``pow`` on truncated series."""
    if op == "add":
        return a + b
    if op == "neg":
        return -a
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        if not isinstance(b, int) or b < 0:
            raise NegativeExponent("pow requires an integer k >= 0")
        return a ** b
    raise ValueError(f"unknown series operation {op!r}")


# ---------------------------------------------------------------------------
# evaluation context


def _normalize_q(q):
    if q is None or isinstance(q, Fraction):
        return q
    if isinstance(q, (int, float, str)):
        return to_fraction(q)
    if isinstance(q, complex):
        if q.imag == 0:
            return Fraction(q.real)
        return q
    if isinstance(q, (mpmath.mpf, mpmath.mpc)) or hasattr(q, "_mpf_") or hasattr(q, "_mpc_"):
        return q
    raise TypeError(f"unsupported q value {q!r}")


@dataclass(frozen=True)
class QContext:
    """Parameter bundle: weight ``alpha``, twist ``h``, backend and q-specification.

    ``base`` substitutes ``q -> q**base`` everywhere; identities that evaluate
    objects at base ``q**a`` use :meth:`with_base` instead of rewriting formulas.
    """

    alpha: object = 1
    h: int = 1
    backend: str = "exact"
    q: object = None
    order: int = DEFAULT_ORDER
    scale: int = 1
    prec: int = DEFAULT_PREC
    tol: object = DEFAULT_TOL
    base: int = 1
    _cache: dict = field(default_factory=dict, init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        alpha = self.alpha
        if isinstance(alpha, (int, float, str)):
            alpha = to_fraction(alpha)
        if self.backend != "numeric" and not isinstance(alpha, Fraction):
            raise TypeError("exact backends need a rational weight alpha")
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        object.__setattr__(self, "alpha", alpha)
        if not isinstance(self.h, int) or self.h < 0:
            raise ValueError("h must be an integer >= 0")
        object.__setattr__(self, "tol", to_fraction(self.tol) if not hasattr(self.tol, "_mpf_")
                           else self.tol)
        q = _normalize_q(self.q)
        object.__setattr__(self, "q", q)
        if self.backend == "exact":
            if q is not None:
                raise ValueError("the exact backend keeps q formal; use backend='rational'")
            _check_shape(self.scale, self.order)
        elif q is None:
            raise ValueError(f"backend {self.backend!r} needs a q value")
        elif q == 0:
            raise QOutOfDomain("q must be nonzero")
        if self.backend == "rational" and not isinstance(q, Fraction):
            raise TypeError("the rational backend needs a rational q")
        if self.backend == "numeric" and self.prec < 53:
            raise ValueError("precision must be at least 53 bits")
        if self.base < 1:
            raise ValueError("base must be a positive integer")

    # -- derived contexts ---------------------------------------------------

    def with_base(self, c: int) -> "QContext":
        return replace(self, base=self.base * c)

    def replace(self, **changes) -> "QContext":
        return replace(self, **changes)

    @property
    def is_exact(self) -> bool:
        return self.backend != "numeric"

    @property
    def mp(self):
        return numeric_context(self.prec)

    # -- numeric helpers ----------------------------------------------------

    def num(self, v):
        """Convert a scalar (Fraction, int, str, complex, mpmath) into this context."""
        mp = self.mp
        if isinstance(v, Fraction):
            return mp.mpf(v.numerator) / v.denominator
        if isinstance(v, int):
            return mp.mpf(v)
        if isinstance(v, complex):
            return mp.mpc(v.real, v.imag)
        if isinstance(v, str):
            return mp.mpf(v)
        if hasattr(v, "_mpc_"):
            return mp.mpc(v)
        return mp.mpf(v)

    @property
    def qn(self):
        """Numeric value of ``q**base``."""
        if "qn" not in self._cache:
            q = self.num(self.q)
            self._cache["qn"] = q ** self.base
        return self._cache["qn"]

    def q_is_one(self) -> bool:
        return self.q == 1

    def require_q_in_domain(self):
        if self.backend == "numeric":
            if self.q == 1:
                raise QOutOfDomain("q = 1 is only accepted by limit-aware operations")
            if abs(self.num(self.q)) >= 1:
                raise QOutOfDomain("numeric backend requires |q| < 1")
        elif self.backend == "rational" and self.q == 1:
            raise QOutOfDomain("q = 1 is only accepted by limit-aware operations")

    # -- backend ring ---------------------------------------------------------

    def zero(self):
        return self.const(0)

    def one(self):
        return self.const(1)

    def const(self, c):
        if self.backend == "exact":
            return QSeries.constant(c, self.scale, self.order)
        if self.backend == "rational":
            return to_fraction(c)
        return self.num(to_fraction(c) if isinstance(c, (int, float)) else c)

    def qpow(self, e):
        """``q**e`` in the backend (``q`` already carries ``base``)."""
        if self.backend == "numeric" and not isinstance(e, (int, Fraction)):
            return self._qpow_real(self.num(e))
        e = to_fraction(e) * self.base
        if self.backend == "exact":
            idx = e * self.scale
            if idx < 0:
                raise NegativeExponentInExactBackend(f"q^{e} has a negative exponent")
            if idx.denominator != 1:
                raise ScaleOverflow(f"exponent {e} is not representable at scale {self.scale}")
            return QSeries.monomial(int(idx), self.scale, self.order)
        if self.backend == "rational":
            if e.denominator != 1:
                raise ScaleOverflow(f"q^{e} is not rational for rational q")
            return self.q ** int(e)
        q = self.num(self.q)
        if e.denominator == 1:
            return q ** int(e)
        return self.mp.power(q, self.num(e))

    def _qpow_real(self, e):
        return self.mp.power(self.num(self.q), e * self.base)


def q_bracket(x, ctx: QContext, sign: str = "plus"):
    """The q-number ``[x]_q = (1 - q^x)/(1 - q)`` or ``[x]_{-q} = (1 - (-q)^x)/(1 + q)``."""
    if sign not in ("plus", "minus"):
        raise ValueError("sign must be 'plus' or 'minus'")
    if ctx.backend == "numeric" and not isinstance(x, (int, Fraction, float, str)):
        xv = x
        integral = None
    else:
        xv = to_fraction(x)
        integral = xv.denominator == 1
    if ctx.backend == "exact":
        if xv < 0:
            raise NegativeExponentInExactBackend(f"[x]_q at x = {xv} < 0")
        if integral:
            k = int(xv)
            step = ctx.base * ctx.scale
            nums = [0] * (ctx.order + 1)
            for j in range(k):
                if j * step > ctx.order:
                    break
                nums[j * step] = 1 if sign == "plus" else (-1) ** j
            return QSeries._make(nums, 1, ctx.scale, ctx.order)
        if sign == "minus":
            raise NegativeExponentInExactBackend("[x]_{-q} needs integer x in the exact backend")
        return (1 - ctx.qpow(xv)) / (1 - ctx.qpow(1))
    if ctx.q_is_one():
        # lim_{q->1}
        if sign == "plus":
            return xv if ctx.backend == "rational" else ctx.num(xv)
        if not integral:
            raise QOutOfDomain("[x]_{-q} at q = 1 needs integer x")
        val = Fraction(1 - (-1) ** int(xv), 2)
        return val if ctx.backend == "rational" else ctx.num(val)
    if ctx.backend == "numeric" and abs(ctx.num(ctx.q)) >= 1:
        raise QOutOfDomain("numeric backend requires |q| < 1")
    if sign == "plus":
        return (1 - ctx.qpow(xv)) / (1 - ctx.qpow(1))
    if integral:
        return (1 - (-1) ** int(xv) * ctx.qpow(xv)) / (1 + ctx.qpow(1))
    if ctx.backend != "numeric":
        raise ScaleOverflow("(-q)^x needs integer x outside the numeric backend")
    mp = ctx.mp
    mq = -ctx.qn
    return (1 - mp.power(mq, ctx.num(xv))) / (1 - mq)


def numeric_pow(z, s, ctx: QContext | None = None):
    """Principal power ``exp(s * Log z)``."""
    mp = ctx.mp if ctx is not None else getattr(z, "context", numeric_context(DEFAULT_PREC))
    if not hasattr(z, "_mpf_") and not hasattr(z, "_mpc_"):
        z = mp.mpmathify(z) if not isinstance(z, Fraction) else mp.mpf(z.numerator) / z.denominator
    if isinstance(s, Fraction):
        s = mp.mpf(s.numerator) / s.denominator
    if z == 0:
        raise ZeroBase("0 raised to a power has no principal logarithm")
    if isinstance(s, int):
        return z ** s
    s = mp.mpmathify(s)
    if mp.im(s) == 0 and mp.isint(mp.re(s)):
        return z ** int(mp.re(s))
    return mp.power(z, s)


def series_eval_numeric(a: QSeries, q0, ctx: QContext | None = None):
    """Evaluate a truncated series at ``q = q0`` (ascending summation).

    The truncation error is ``O(|q0|**((order + 1) / scale))``.
    """
    mp = ctx.mp if ctx is not None else numeric_context(DEFAULT_PREC)
    if isinstance(q0, Fraction):
        q0 = mp.mpf(q0.numerator) / q0.denominator
    else:
        q0 = mp.mpmathify(q0)
    if abs(q0) >= 1:
        raise QOutOfDomain("series evaluation requires |q0| < 1")
    t = q0 if a.scale == 1 else mp.power(q0, mp.mpf(1) / a.scale)
    acc = mp.mpf(0)
    tp = mp.mpf(1)
    d = a._den
    for c in a._num:
        if c:
            acc += c * tp
        tp *= t
    return acc / d


def weighted_bracket(y, ctx: QContext):
    """``[y]_{q^alpha}`` for the context's weight."""
    a = ctx.alpha
    if ctx.backend == "exact" and a.denominator == 1:
        return q_bracket(y, ctx.with_base(int(a)))
    if ctx.backend != "exact" and ctx.q_is_one():
        return to_fraction(y) if ctx.backend == "rational" else ctx.num(y)
    if ctx.backend == "numeric" and not isinstance(y, (int, Fraction)):
        return (1 - ctx.qpow(a * ctx.num(y))) / (1 - ctx.qpow(a))
    return (1 - ctx.qpow(a * to_fraction(y))) / (1 - ctx.qpow(a))
