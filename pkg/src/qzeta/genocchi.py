"""Weighted (h,q)-Genocchi numbers and polynomials, twisted power sums and
their classical q -> 1 counterparts.

Indexing follows the Genocchi index: ``genocchi_poly(n, x, ctx)`` is

    n [2]_q sum_{m>=0} (-1)^m q^{mh} [x+m]_{q^alpha}^{n-1},

evaluated through the closed binomial form

    n [2]_q (1-q^alpha)^{-(n-1)} sum_k C(n-1,k) (-1)^k q^{alpha k x} / (1 + q^{alpha k + h}).

The alternating series itself is kept as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import H0InExactBackend, InsufficientTerms, NegativeIndex
from .qcore import QContext, QSeries, to_fraction, weighted_bracket


def _arg(x, ctx: QContext):
    if ctx.backend == "numeric" and not isinstance(x, (int, float, str, Fraction)):
        return x
    return to_fraction(x)


def genocchi_poly(n: int, x, ctx: QContext):
    """Weighted (h,q)-Genocchi polynomial; ``x = 0`` gives the Genocchi number."""
    if n < 0:
        raise NegativeIndex(f"Genocchi index {n} < 0")
    if ctx.backend == "exact" and ctx.h == 0:
        raise H0InExactBackend("h = 0 has no order-by-order expansion in the exact backend")
    if n == 0:
        return ctx.zero()
    ctx.require_q_in_domain()
    return _genocchi_closed(n, _arg(x, ctx), ctx)


@lru_cache(maxsize=8192)
def _genocchi_closed(n, x, ctx):
    alpha, h = ctx.alpha, ctx.h
    total = ctx.zero()
    for k in range(n):
        c = comb(n - 1, k) * (-1) ** k
        total = total + c * ctx.qpow(alpha * k * x) / (1 + ctx.qpow(alpha * k + h))
    return n * (1 + ctx.qpow(1)) * (1 - ctx.qpow(alpha)) ** (-(n - 1)) * total


def genocchi_number(n: int, ctx: QContext):
    return genocchi_poly(n, 0, ctx)


def _bracket_sup(ctx: QContext):
    """Upper bound of ``|[y]_{q^alpha}|`` over ``y >= 0``."""
    mp = ctx.mp
    v = ctx.qn ** ctx.num(ctx.alpha) if not isinstance(ctx.alpha, int) else ctx.qn ** ctx.alpha
    if mp.im(v) == 0 and mp.re(v) > 0:
        return 1 / (1 - mp.re(v))
    return 2 / (1 - abs(v))


def genocchi_oracle(n: int, x, ctx: QContext, M: int | None = None):
    """Independent evaluation by direct summation of the alternating series.

    Exact backend: term ``m`` starts at order ``m*h`` in q, so ``M`` terms are
    exact through the truncation order once ``M*h`` passes it.  Numeric
    backend: partial sums with a geometric tail bound (``h >= 1``) or averaged
    consecutive partial sums (``h = 0``).
    """
    if n < 1:
        raise NegativeIndex("the oracle needs n >= 1")
    x = _arg(x, ctx)
    h = ctx.h
    if ctx.backend == "exact":
        if h == 0:
            raise H0InExactBackend("the alternating series does not truncate at h = 0")
        step = h * ctx.base * ctx.scale
        if M is None:
            M = ctx.order // step + 1
        if M * step <= ctx.order:
            raise InsufficientTerms(f"{M} terms do not reach order {ctx.order}")
        total = ctx.zero()
        for m in range(M):
            total = total + (-1) ** m * ctx.qpow(m * h) * weighted_bracket(x + m, ctx) ** (n - 1)
        return n * (1 + ctx.qpow(1)) * total
    if ctx.backend == "rational":
        raise InsufficientTerms("the rational backend has no convergent series form")

    ctx.require_q_in_domain()
    mp = ctx.mp
    tol = ctx.num(ctx.tol)
    two_q = 1 + ctx.qpow(1)
    terms = (lambda m: ctx.qpow(m * h) * weighted_bracket(x + m, ctx) ** (n - 1))
    if h >= 1:
        w = abs(ctx.qn) ** h
        B = _bracket_sup(ctx) ** (n - 1)
        scale = n * abs(two_q) * B / (1 - w)
        if M is None:
            M = 0
            while scale * w ** M >= tol:
                M += 1
        elif scale * w ** M >= tol:
            raise InsufficientTerms(f"tail bound after {M} terms exceeds the tolerance")
        total = mp.mpf(0)
        for m in range(M):
            total += (-1) ** m * terms(m)
        return n * two_q * total
    # h = 0: average of consecutive partial sums
    cap = M if M is not None else 10**6
    partial = mp.mpf(0)
    a_prev = terms(0)
    m = 0
    while True:
        partial += (-1) ** m * a_prev
        a_next = terms(m + 1)
        a_after = terms(m + 2)
        if abs(a_next - a_after) < 2 * tol:
            avg = partial + (-1) ** (m + 1) * a_next / 2
            return n * two_q * avg
        m += 1
        if m >= cap:
            raise InsufficientTerms(f"averaged partial sums did not settle in {cap} terms")
        a_prev = a_next


# ---------------------------------------------------------------------------
# classical objects


@lru_cache(maxsize=None)
def _classical_table(n: int, x: Fraction) -> tuple[Fraction, ...]:
    order = max(n, 1)
    exp_xt = QSeries([x**k / factorial(k) for k in range(order + 1)], order=order)
    exp_t_plus_1 = QSeries([Fraction(2)] + [Fraction(1, factorial(k)) for k in range(1, order + 1)],
                           order=order)
    f = exp_xt / exp_t_plus_1
    # 2t * f(t): coefficient of t^k is 2 f_{k-1}
    return (Fraction(0),) + tuple(2 * f[k - 1] * factorial(k) for k in range(1, n + 1))


def classical_genocchi_poly(n: int, x) -> Fraction:
    """Ordinary Genocchi polynomial ``G_n(x)`` from ``2t e^{xt}/(e^t+1)``."""
    if n < 0:
        raise NegativeIndex(f"Genocchi index {n} < 0")
    return _classical_table(n, to_fraction(x))[n]


def s_tilde(m: int, a: int, i, ctx: QContext):
    """Twisted alternating power sum ``sum_{j<a} (-1)^j q^{j i} [j]_{q^alpha}^m`` (0^0 = 1)."""
    if m < 0:
        raise NegativeIndex(f"power {m} < 0")
    if a < 1:
        raise ValueError("a must be >= 1")
    i = to_fraction(i) if not hasattr(i, "_mpf_") else i
    total = ctx.zero()
    for j in range(a):
        total = total + (-1) ** j * ctx.qpow(j * i) * weighted_bracket(j, ctx) ** m
    return total


def s_classical(m: int, a: int) -> int:
    """``S_m(a) = sum_{j<a} (-1)^j j^m`` with 0^0 = 1."""
    if m < 0:
        raise NegativeIndex(f"power {m} < 0")
    if a < 1:
        raise ValueError("a must be >= 1")
    return sum((-1) ** j * j**m for j in range(a))


def genocchi_addition_rhs(n: int, x, y, ctx: QContext):
    """``sum_j C(n,j) q^{alpha(j-1)y} G_j(x) [y]_{q^alpha}^{n-j}``.

    The ``j = 0`` term vanishes identically (the zeroth Genocchi polynomial is
    0), which keeps every surviving exponent ``alpha(j-1)y`` non-negative.
    """
    if n < 0:
        raise NegativeIndex(f"Genocchi index {n} < 0")
    x, y = _arg(x, ctx), _arg(y, ctx)
    by = weighted_bracket(y, ctx)
    total = ctx.zero()
    for j in range(1, n + 1):
        total = total + comb(n, j) * ctx.qpow(ctx.alpha * (j - 1) * y) \
            * genocchi_poly(j, x, ctx) * by ** (n - j)
    return total
