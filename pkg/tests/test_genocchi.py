from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qzeta.errors import H0InExactBackend, InsufficientTerms, NegativeIndex, ScaleOverflow
from qzeta.genocchi import (
    classical_genocchi_poly,
    genocchi_addition_rhs,
    genocchi_number,
    genocchi_oracle,
    genocchi_poly,
    s_classical,
    s_tilde,
)
from qzeta.qcore import QContext, QSeries, series_eval_numeric, weighted_bracket

# G_n from 2t/(e^t + 1), n = 0..12
CLASSICAL = [0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073]


def test_classical_numbers():
    assert [classical_genocchi_poly(n, 0) for n in range(13)] == CLASSICAL


def test_classical_polynomials_at_one():
    # G_n(1) = -G_n for n >= 2
    for n in range(2, 12):
        assert classical_genocchi_poly(n, 1) == -CLASSICAL[n]
    assert classical_genocchi_poly(1, 1) == 1


def test_classical_appell_property():
    # G_n(x) = sum_k C(n,k) G_k x^{n-k}
    x = Fraction(3, 7)
    for n in range(10):
        expected = sum(comb(n, k) * CLASSICAL[k] * x ** (n - k) for k in range(n + 1))
        assert classical_genocchi_poly(n, x) == expected


@pytest.mark.parametrize("alpha", [1, 2])
@pytest.mark.parametrize("h", [1, 2])
@pytest.mark.parametrize("x", [0, 1, 2])
def test_closed_form_matches_series_oracle(alpha, h, x):
    ctx = QContext(alpha=alpha, h=h, order=40)
    for n in range(1, 8):
        assert genocchi_poly(n, x, ctx) == genocchi_oracle(n, x, ctx)


def test_closed_form_matches_oracle_at_half_integer_x():
    ctx = QContext(alpha=1, h=1, order=30, scale=2)
    for n in range(1, 6):
        assert genocchi_poly(n, Fraction(1, 2), ctx) == genocchi_oracle(n, Fraction(1, 2), ctx)


@pytest.mark.parametrize("h", [0, 1, 3])
def test_numeric_closed_form_matches_oracle(h):
    ctx = QContext(alpha=Fraction(3, 2), h=h, backend="numeric", q=Fraction(2, 5), prec=128,
                   tol=Fraction(1, 10**32))
    for n in range(1, 7):
        a = genocchi_poly(n, Fraction(1, 3), ctx)
        b = genocchi_oracle(n, Fraction(1, 3), ctx)
        assert abs(a - b) < 1e-30


def test_first_values():
    ctx = QContext(h=1, order=10)
    assert genocchi_number(0, ctx).is_zero()
    assert genocchi_number(1, ctx) == QSeries.constant(1, order=10)
    num = QContext(backend="numeric", q=Fraction(1, 2))
    assert abs(genocchi_number(1, num) - 1) < 1e-36
    # at h = 2 the first number is [2]_q / [2]_{q^2}
    r = QContext(h=2, backend="rational", q=Fraction(1, 3))
    assert genocchi_number(1, r) == Fraction(4, 3) / Fraction(10, 9)


def test_rational_backend_agrees_with_numeric():
    r = QContext(alpha=2, h=1, backend="rational", q=Fraction(1, 3))
    n = QContext(alpha=2, h=1, backend="numeric", q=Fraction(1, 3))
    for k in range(9):
        assert abs(genocchi_poly(k, 2, n) - n.num(genocchi_poly(k, 2, r))) < 1e-30


def test_series_evaluated_at_a_point_agrees_with_rational():
    ctx = QContext(order=160)
    r = QContext(backend="rational", q=Fraction(1, 2))
    for n in range(1, 6):
        v = series_eval_numeric(genocchi_poly(n, 1, ctx), Fraction(1, 2))
        assert abs(v - r.num(genocchi_poly(n, 1, r))) < 1e-30


def test_q_to_one_limit():
    q = Fraction(1) - Fraction(1, 10**6)
    ctx = QContext(backend="numeric", q=q, prec=256, tol=Fraction(1, 10**40))
    for n in range(1, 5):
        assert abs(genocchi_poly(n, 0, ctx) - CLASSICAL[n]) < 1e-3


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 3), st.integers(0, 3), st.integers(1, 2), st.integers(1, 2))
def test_addition_theorem(n, x, y, alpha, h):
    ctx = QContext(alpha=alpha, h=h, order=24)
    assert genocchi_poly(n, x + y, ctx) == genocchi_addition_rhs(n, x, y, ctx)


def test_addition_theorem_at_half_integer_shift():
    ctx = QContext(alpha=1, h=1, order=30, scale=2)
    y = Fraction(1, 2)
    for n in range(6):
        assert genocchi_poly(n, 1 + y, ctx) == genocchi_addition_rhs(n, 1, y, ctx)


def test_rational_backend_refuses_fractional_exponents():
    ctx = QContext(backend="rational", q=Fraction(1, 4))
    with pytest.raises(ScaleOverflow):
        genocchi_poly(2, Fraction(1, 2), ctx)


def test_twisted_power_sums():
    assert [s_classical(m, 4) for m in range(4)] == [0, -2, -6, -20]
    assert s_classical(0, 3) == 1
    ctx = QContext(alpha=1, order=8)
    # m = 0, a = 2, twist 1: 1 - q
    assert s_tilde(0, 2, 1, ctx) == QSeries([1, -1], order=8)
    r = QContext(backend="rational", q=Fraction(1, 2))
    expected = sum((-1) ** j * Fraction(1, 2) ** (2 * j) * weighted_bracket(j, r) ** 3 for j in range(5))
    assert s_tilde(3, 5, 2, r) == expected


def test_twisted_power_sums_tend_to_classical():
    ctx = QContext(backend="numeric", q=1 - Fraction(1, 10**8))
    for m in range(4):
        assert abs(s_tilde(m, 5, 1, ctx) - s_classical(m, 5)) < 1e-5


def test_errors():
    with pytest.raises(NegativeIndex):
        genocchi_poly(-1, 0, QContext())
    with pytest.raises(H0InExactBackend):
        genocchi_poly(3, 0, QContext(h=0))
    with pytest.raises(InsufficientTerms):
        genocchi_oracle(3, 0, QContext(order=20), M=5)
    with pytest.raises(NegativeIndex):
        s_tilde(-1, 3, 1, QContext())
    with pytest.raises(NegativeIndex):
        classical_genocchi_poly(-2, 0)
