from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qzeta.errors import (
    NegativeExponentInExactBackend,
    NonUnitConstantTerm,
    QOutOfDomain,
    ScaleMismatch,
    ZeroBase,
)
from qzeta.qcore import (
    QContext,
    QSeries,
    numeric_pow,
    q_bracket,
    rational_from_str,
    rational_to_str,
    series_eval_numeric,
    to_fraction,
    weighted_bracket,
)

ORDER = 8
small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
series = st.lists(small, min_size=1, max_size=ORDER + 1).map(lambda c: QSeries(c, order=ORDER))
units = series.filter(lambda s: s[0] != 0)


def naive_mul(a, b):
    out = [Fraction(0)] * (ORDER + 1)
    for i in range(ORDER + 1):
        for j in range(ORDER + 1 - i):
            out[i + j] += a[i] * b[j]
    return QSeries(out, order=ORDER)


@given(series, series, series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == QSeries.zero(order=ORDER)


@given(series, series)
def test_mul_matches_schoolbook(a, b):
    assert a * b == naive_mul(a, b)


@given(units)
def test_inverse(a):
    one = QSeries.constant(1, order=ORDER)
    assert a * a.inv() == one
    assert a / a == one
    assert a ** -2 * a**2 == one


@given(series, st.integers(0, 4))
def test_power_is_repeated_product(a, k):
    p = QSeries.constant(1, order=ORDER)
    for _ in range(k):
        p = p * a
    assert a**k == p


def test_binomial_inverse_is_geometric():
    inv = (1 - QSeries.monomial(2, order=9)).inv()
    assert inv.coeffs == tuple(Fraction(1 - e % 2) for e in range(10))


def test_monomial_shift_and_truncation():
    s = QSeries([1, 2, 3], order=5)
    assert s.shift(2) == QSeries([0, 0, 1, 2, 3], order=5)
    assert s.shift(4).coeffs[-2:] == (Fraction(1), Fraction(2))
    assert s.truncate(1) == QSeries([1, 2], order=1)
    assert s.valuation() == 0 and QSeries([0, 0, 5], order=3).valuation() == 2
    assert QSeries.zero().valuation() is None


def test_rescale_keeps_the_series():
    # the index order is kept, so binary operations line up after rescaling
    s = QSeries([1, 1, 1, 1, 1], scale=1, order=4)
    r = s.rescale(2)
    assert r.scale == 2 and r.order == 4
    assert r.coeffs == (1, 0, 1, 0, 1)
    assert r + QSeries.monomial(1, scale=2, order=4) == QSeries([1, 1, 1, 0, 1], scale=2, order=4)


def test_mixed_scales_are_rejected():
    with pytest.raises(ScaleMismatch):
        QSeries([1, 1], scale=1, order=4) + QSeries([1, 1], scale=2, order=4)


def test_non_unit_constant_term_has_no_inverse():
    with pytest.raises(NonUnitConstantTerm):
        QSeries([0, 1], order=4).inv()


def test_json_shape_and_round_trip():
    s = QSeries([1, 1, 1], order=2)
    assert s.to_json() == '{"scale":1,"order":2,"coeffs":["1","1","1"]}'
    t = QSeries([Fraction(-1, 3), 0, Fraction(7, 2)], scale=3, order=5)
    assert QSeries.from_json(t.to_json()) == t
    assert str(QSeries([1, 1], order=4)) == "1 + q + O(q^5)"


def test_huge_rationals_serialize():
    big = Fraction(3**9000, 7**5000 + 2)
    assert rational_from_str(rational_to_str(big)) == big
    assert rational_from_str("-12") == -12 and rational_from_str("0.25") == Fraction(1, 4)


def test_decimal_input_is_exact():
    assert to_fraction("0.5") == Fraction(1, 2)
    assert to_fraction("1e-30") == Fraction(1, 10**30)
    assert to_fraction("3/9") == Fraction(1, 3)


# -- q-numbers ---------------------------------------------------------------


def test_bracket_series_and_rational():
    ctx = QContext(order=6)
    assert q_bracket(3, ctx) == QSeries([1, 1, 1], order=6)
    assert q_bracket(3, ctx, sign="minus") == QSeries([1, -1, 1], order=6)
    r = QContext(backend="rational", q=Fraction(1, 2))
    assert q_bracket(3, r) == Fraction(7, 4)
    assert q_bracket(3, r, sign="minus") == Fraction(3, 4)


def test_fractional_bracket_uses_scale():
    ctx = QContext(order=6, scale=2)
    b = q_bracket(Fraction(1, 2), ctx)
    # (1 - t)/(1 - t^2) = 1/(1 + t)
    assert b.coeffs == tuple(Fraction((-1) ** e) for e in range(7))


@given(st.integers(0, 30), st.integers(0, 30),
       st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=50))
def test_bracket_additivity_exact(x, y, q):
    if q == 0:
        return
    ctx = QContext(backend="rational", q=q)
    assert q_bracket(x + y, ctx) == q_bracket(x, ctx) + q**x * q_bracket(y, ctx)


@settings(max_examples=50)
@given(st.floats(0, 20), st.floats(0, 20), st.floats(0.05, 0.95))
def test_bracket_additivity_numeric(x, y, q):
    ctx = QContext(backend="numeric", q=Fraction(q), prec=128)
    mp = ctx.mp
    x, y = Fraction(x), Fraction(y)
    lhs = q_bracket(x + y, ctx)
    rhs = q_bracket(x, ctx) + ctx.qpow(x) * q_bracket(y, ctx)
    assert abs(lhs - rhs) <= 4 * mp.eps * max(abs(lhs), 1)


@given(st.integers(0, 20).map(lambda k: 2 * k + 1),
       st.fractions(min_value=Fraction(1, 10), max_value=Fraction(9, 10), max_denominator=40))
def test_odd_minus_bracket(M, q):
    ctx = QContext(backend="rational", q=q)
    assert q_bracket(M, ctx, sign="minus") == (1 + q**M) / (1 + q)


def test_q_equal_one_limits():
    ctx = QContext(backend="rational", q=1)
    assert q_bracket(Fraction(5, 2), ctx) == Fraction(5, 2)
    assert q_bracket(4, ctx, sign="minus") == 0
    assert q_bracket(5, ctx, sign="minus") == 1


def test_weighted_bracket_is_bracket_in_q_alpha():
    ctx = QContext(alpha=2, order=8)
    assert weighted_bracket(3, ctx) == QSeries([1, 0, 1, 0, 1], order=8)


def test_exact_backend_rejects_negative_exponents():
    with pytest.raises(NegativeExponentInExactBackend):
        q_bracket(-1, QContext())
    with pytest.raises(NegativeExponentInExactBackend):
        QContext().qpow(-2)


def test_numeric_domain_and_zero_base():
    with pytest.raises(QOutOfDomain):
        QContext(backend="numeric", q=Fraction(3, 2)).require_q_in_domain()
    with pytest.raises(QOutOfDomain):
        QContext(backend="numeric", q=0)
    with pytest.raises(ZeroBase):
        numeric_pow(mpmath.mpf(0), mpmath.mpf(-1))


def test_series_evaluation_matches_rational():
    s = QSeries([1, -2, Fraction(1, 3)], order=2)
    v = series_eval_numeric(s, Fraction(1, 2))
    assert abs(v - (1 - 1 + Fraction(1, 12))) < 1e-35


def test_base_substitution():
    ctx = QContext(order=6).with_base(3)
    assert ctx.qpow(1) == QSeries.monomial(3, order=6)
    r = QContext(backend="rational", q=Fraction(1, 2)).with_base(2)
    assert r.qpow(1) == Fraction(1, 4)
