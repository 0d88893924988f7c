"""The weighted (h,q)-zeta function

    zeta(s, x) = [2]_q sum_{m>=0} (-1)^m q^{mh} [m+x]_{q^alpha}^{-s},

its values at non-positive integers, and the classical Hurwitz-Euler zeta
function ``2 sum (-1)^m (m+x)^{-s}``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BackendUnsupported, ConvergenceDomain, MaxTermsExceeded, NonPositiveX
from .genocchi import genocchi_poly
from .qcore import DEFAULT_PREC, DEFAULT_TOL, QContext, numeric_context, to_fraction, weighted_bracket

MAX_TERMS = 10**6


def _as_mp(v, ctx: QContext):
    mp = ctx.mp
    if isinstance(v, str):
        v = v.strip().replace(" ", "")
        if v.endswith(("i", "j")):
            return mp.mpmathify(v[:-1] + "j")
        return mp.mpf(v)
    return ctx.num(v)


def neg_int_order(s) -> int | None:
    """``n`` when ``s == -n`` for an integer ``n >= 0``, else ``None``."""
    if isinstance(s, (int, Fraction)):
        s = Fraction(s)
        return int(-s) if s.denominator == 1 and s <= 0 else None
    if isinstance(s, str):
        try:
            return neg_int_order(Fraction(s))
        except ValueError:
            return None
    if hasattr(s, "_mpc_"):
        if s.imag != 0:
            return None
        s = s.real
    if hasattr(s, "_mpf_") and s <= 0 and s == int(s):
        return int(-s)
    return None


def _term_bound(m, x, sig, tim, ctx):
    """Upper bound of ``|[y]_{q^alpha}^{-s}|`` over ``y >= m + x``."""
    mp = ctx.mp
    v = ctx.qn ** ctx.num(ctx.alpha)
    if mp.im(v) == 0 and mp.re(v) > 0:
        v = mp.re(v)
        lo = (1 - v ** (m + x)) / (1 - v)
        hi = 1 / (1 - v)
        spread = 1
    else:
        av = abs(v)
        lo = (1 - av ** (m + x)) / (1 + av)
        hi = 2 / (1 - av)
        spread = mp.exp(mp.pi * abs(tim))
    if sig > 0:
        return spread * lo ** (-sig) if lo > 0 else mp.inf
    if sig < 0:
        return spread * hi ** (-sig)
    return spread


def zeta_eval(s, x, ctx: QContext, *, tol=None, max_terms: int = MAX_TERMS):
    """Numeric value of the weighted (h,q)-zeta function by certified partial summation.

    For ``h >= 1`` summation stops at the first ``N`` whose tail bound
    ``|[2]_q| B |q|^{Nh} / (1 - |q|^h)`` falls below ``tol``.  For ``h = 0``
    the average of consecutive partial sums is returned once successive terms
    differ by less than ``2 tol``.
    """
    if ctx.backend != "numeric":
        raise BackendUnsupported("zeta_eval needs the numeric backend")
    ctx.require_q_in_domain()
    mp = ctx.mp
    tol = ctx.num(to_fraction(tol) if tol is not None else ctx.tol)
    n_neg = neg_int_order(s)
    s = _as_mp(s, ctx)
    x = ctx.num(x) if not hasattr(x, "_mpf_") else x
    if x < 0 or (x == 0 and n_neg is None):
        raise NonPositiveX(f"x = {x} must be positive")
    h = ctx.h
    sig, tim = mp.re(s), mp.im(s)
    two_q = 1 + ctx.qpow(1)

    def term(m):
        br = weighted_bracket(x + m, ctx)
        if n_neg is not None:
            return br ** n_neg
        return mp.power(br, -s)

    if h >= 1:
        w = abs(ctx.qn) ** h
        total = mp.mpf(0)
        wm = mp.mpf(1)
        for m in range(max_terms + 1):
            if abs(two_q) * _term_bound(m, x, sig, tim, ctx) * wm / (1 - w) < tol:
                return two_q * total
            if m == max_terms:
                break
            total += (-1) ** m * ctx.qpow(m * h) * term(m)
            wm *= w
        raise MaxTermsExceeded(f"tail bound not below tolerance after {max_terms} terms")

    partial = mp.mpf(0)
    a_cur = term(0)
    a_next = term(1)
    for m in range(max_terms):
        partial += (-1) ** m * a_cur
        a_after = term(m + 2)
        if abs(a_next - a_after) < 2 * tol:
            return two_q * (partial + (-1) ** (m + 1) * a_next / 2)
        a_cur, a_next = a_next, a_after
    raise MaxTermsExceeded(f"averaged partial sums did not settle in {max_terms} terms")


def zeta_neg_int(n: int, x, ctx: QContext):
    """Value at ``s = -n``: the Genocchi polynomial ``G_{n+1}(x) / (n+1)`` (any backend)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return genocchi_poly(n + 1, x, ctx) / (n + 1)


def zeta_value(s, x, ctx: QContext, *, tol=None):
    """Dispatch: exact interpolation at non-positive integers, else numeric summation."""
    n = neg_int_order(s)
    if n is not None and ctx.backend != "numeric":
        return zeta_neg_int(n, x, ctx)
    if ctx.backend != "numeric":
        raise BackendUnsupported(f"s = {s} needs the numeric backend")
    return zeta_eval(s, x, ctx, tol=tol)


def hurwitz_euler(s, x, tol=DEFAULT_TOL, prec: int = DEFAULT_PREC):
    """Hurwitz-Euler zeta ``2 sum_{m>=0} (-1)^m (m+x)^{-s}`` for ``Re(s) > 0``.

    Summed with the Cohen-Rodriguez Villegas-Zagier weights.  The terms are
    moments ``(m+x)^{-s} = Gamma(s)^{-1} int_0^1 t^m t^{x-1} (-log t)^{s-1} dt``
    of a measure of total variation ``V = Gamma(Re s) x^{-Re s} / |Gamma(s)|``,
    so ``n`` weights leave an error of at most ``2V / d_n`` with
    ``d_n >= (3 + sqrt 8)^n / 2``.
    """
    ctx = QContext(backend="numeric", q=Fraction(1, 2), prec=prec)
    mp = numeric_context(prec + 32)
    s = _as_mp(s, ctx)
    s = mp.mpc(s) if hasattr(s, "_mpc_") else mp.mpf(s)
    x = mp.mpf(to_fraction(x).numerator) / to_fraction(x).denominator \
        if isinstance(x, (int, Fraction, str, float)) else mp.mpf(x)
    tol = mp.mpf(to_fraction(tol).numerator) / to_fraction(tol).denominator \
        if isinstance(tol, (int, Fraction, str, float)) else mp.mpf(tol)
    sig = mp.re(s)
    if sig <= 0:
        raise ConvergenceDomain("hurwitz_euler needs Re(s) > 0")
    if x <= 0:
        raise NonPositiveX(f"x = {x} must be positive")
    V = mp.gamma(sig) / abs(mp.gamma(s)) * x ** (-sig)
    growth = 3 + mp.sqrt(8)
    n = 1
    while 8 * V / growth**n >= tol:
        n += 1
    d = growth**n
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    acc = mp.mpf(0)
    for k in range(n):
        c = b - c
        acc += c * mp.power(k + x, -s)
        b = (k + n) * (k - n) * b / ((k + mp.mpf(1) / 2) * (k + 1))
    out = 2 * acc / d
    return ctx.mp.mpc(out) if hasattr(out, "_mpc_") else ctx.mp.mpf(out)
