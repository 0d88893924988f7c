from fractions import Fraction
from math import inf

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qzeta.errors import InvalidPrime, LevelTooLarge, QNotPadicallyClose, ResidueOutOfRange
from qzeta.padic import (
    IntegrandSpec,
    PadicNumber,
    Report,
    bosonic_level_integral,
    convergence_report,
    fermionic_level_integral,
    fermionic_target,
    padic_abs,
    padic_reduce,
    qhaar_measure,
    vp,
)

nonzero = st.fractions(max_denominator=10**6).filter(lambda r: r != 0)
primes = st.sampled_from([3, 5, 7, 11])


def test_valuations():
    assert vp(Fraction(50), 5) == 2
    assert vp(Fraction(3, 25), 5) == -2
    assert vp(Fraction(0), 7) == inf
    assert padic_abs(Fraction(1, 49), 7) == 49


@given(nonzero, nonzero, primes)
def test_valuation_is_multiplicative(a, b, p):
    assert vp(a * b, p) == vp(a, p) + vp(b, p)


@given(nonzero, nonzero, primes)
def test_ultrametric(a, b, p):
    assert vp(a + b, p) >= min(vp(a, p), vp(b, p))


def test_reduction_and_digits():
    r = padic_reduce(Fraction(-1), 5, 4)
    assert (r.v, r.u) == (0, 624)
    assert r.digits() == [4, 4, 4, 4]
    half = padic_reduce(Fraction(1, 2), 3, 3)
    assert (2 * half.u) % 27 == 1
    assert padic_reduce(Fraction(75, 2), 5, 2).v == 2
    assert padic_reduce(0, 3, 2).zero
    with pytest.raises(ValueError):
        PadicNumber(5, 2, 0, 10)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_measure_normalization(p, n):
    q = Fraction(1 + p)
    assert sum(qhaar_measure(a, n, p, q) for a in range(p**n)) == 1


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_measure_refinement(p, n):
    q = Fraction(1 + p, 1 - p)  # also p-adically close to 1
    for a in range(p**n):
        children = sum(qhaar_measure(a + b * p**n, n + 1, p, q) for b in range(p))
        assert children == qhaar_measure(a, n, p, q)


def test_bosonic_constant_is_one():
    # h = 1 makes the integrand the constant 1
    assert bosonic_level_integral(IntegrandSpec(0, h=1), 3, 5, Fraction(6)) == 1


def test_fermionic_constant_is_exact_at_every_level():
    # sum (-1)^xi q^xi / [p^N]_{-q} = 1, so the degree-0, h = 1 integral is 1 = G_1/1
    for N in (1, 2, 3):
        assert fermionic_level_integral(IntegrandSpec(0), N, 5, Fraction(6)) == 1
    assert fermionic_target(IntegrandSpec(0), Fraction(6)) == 1


def test_fermionic_level_against_direct_sum():
    spec, p, q, N = IntegrandSpec(2, x=1, alpha=2, h=2), 3, Fraction(4), 2
    pts = p**N
    qa = q**2
    direct = sum((-1) ** xi * q ** (2 * xi) * ((1 - qa ** (1 + xi)) / (1 - qa)) ** 2 for xi in range(pts))
    assert fermionic_level_integral(spec, N, p, q) == direct * (1 + q) / (1 + q**pts)


def test_fermionic_level_with_non_integer_q():
    spec, p, q = IntegrandSpec(1, x=1), 3, Fraction(4, 7)
    pts = 9
    direct = sum((-1) ** xi * q**xi * (1 - q ** (1 + xi)) / (1 - q) for xi in range(pts))
    assert fermionic_level_integral(spec, 2, p, q) == direct * (1 + q) / (1 + q**pts)


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("degree", [0, 2, 4])
def test_convergence_report(p, degree):
    rep = convergence_report(IntegrandSpec(degree, x=1), p, Fraction(1 + p), 4)
    assert rep.verdict == "cauchy"
    assert rep.monotone() and rep.within_bound()
    assert rep.levels[0].diff_valuation is None
    assert [r.N for r in rep.levels] == [1, 2, 3, 4]


def test_report_round_trip():
    rep = convergence_report(IntegrandSpec(3, x=2, alpha=2, h=2), 3, Fraction(4), 3)
    assert Report.from_json(rep.to_json()) == rep
    d = rep.to_dict()
    assert d["levels"][0]["diff_valuation"] is None


def test_errors():
    with pytest.raises(InvalidPrime):
        vp(Fraction(3), 2)
    with pytest.raises(InvalidPrime):
        qhaar_measure(0, 1, 9, Fraction(10))
    with pytest.raises(QNotPadicallyClose):
        qhaar_measure(0, 1, 5, Fraction(2))
    with pytest.raises(QNotPadicallyClose):
        qhaar_measure(0, 1, 5, Fraction(1))
    with pytest.raises(ResidueOutOfRange):
        qhaar_measure(25, 2, 5, Fraction(6))
    with pytest.raises(LevelTooLarge):
        fermionic_level_integral(IntegrandSpec(1), 9, 5, Fraction(6))
    with pytest.raises(ValueError):
        IntegrandSpec(2, x=Fraction(1, 2))
    with pytest.raises(ValueError):
        convergence_report(IntegrandSpec(1), 5, Fraction(6), 7)
