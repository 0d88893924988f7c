from fractions import Fraction

import pytest

from qzeta.errors import BackendUnsupported, ConfigInvalid, ParityViolation
from qzeta.qcore import QContext
from qzeta.verify import (
    IDENTITIES,
    IdentityId,
    IdentityReport,
    SuiteConfig,
    SuiteEntry,
    SuiteReport,
    check_case,
    default_suite,
    expand_grid,
    run_suite,
    smoke_suite,
    suite_by_name,
    verify_identity,
)

EXACT = QContext(order=32)
NUMERIC = QContext(backend="numeric", q=Fraction(1, 2), prec=128, tol=Fraction(1, 10**30))


def test_expand_grid_order_and_tuples():
    cases = expand_grid({"a,b": [(1, 3), (3, 5)], "m": [0, 1]})
    assert cases == [{"a": 1, "b": 3, "m": 0}, {"a": 1, "b": 3, "m": 1},
                     {"a": 3, "b": 5, "m": 0}, {"a": 3, "b": 5, "m": 1}]
    assert expand_grid(None) == [{}]
    with pytest.raises(ConfigInvalid):
        expand_grid({"a,b": [(1, 3, 5)]})


@pytest.mark.parametrize("identity,params", [
    (IdentityId.RECURRENCE, {"m": 0, "alpha": 2, "h": 2}),
    (IdentityId.RECURRENCE, {"m": 5, "alpha": 1, "h": 2}),
    (IdentityId.DISTRIBUTION_G, {"a": 3, "n": 4, "x": 1, "alpha": 2, "h": 1}),
    (IdentityId.ADDITION_EQ10, {"n": 5, "x": 2, "y": 3, "alpha": 2, "h": 2}),
    (IdentityId.ADDITION_EQ10, {"n": 4, "x": 1, "y": "1/2"}),
    (IdentityId.SYM_GEN_THM23, {"a": 3, "b": 5, "m": 6, "x": 1, "alpha": 2, "h": 1}),
    (IdentityId.SYM_S_THM25, {"a": 1, "b": 3, "m": 5, "x": 1, "alpha": 2, "h": 2}),
    (IdentityId.CLASSICAL_COR26, {"a": 5, "b": 7, "m": 9, "x": "1/2"}),
])
def test_exact_identities_hold(identity, params):
    case = check_case(identity, params, EXACT)
    assert case.passed and case.residual == "0"


@pytest.mark.parametrize("identity,params", [
    (IdentityId.SYM_ZETA_THM21, {"a": 3, "b": 5, "s": "2.5", "x": 1}),
    (IdentityId.DIST_ZETA_EQ9, {"a": 5, "s": "4.0", "x": 2}),
    (IdentityId.INTERPOLATION, {"n": 4, "x": 2}),
    (IdentityId.FUNCEQ, {"s": "1.5", "x": 1}),
    (IdentityId.FUNCEQ, {"s": "2+1i", "x": 1}),
    (IdentityId.ADDITION_EQ10, {"n": 6, "x": 1, "y": "3/2"}),
])
def test_numeric_identities_hold(identity, params):
    case = check_case(identity, params, NUMERIC)
    assert case.passed
    assert Fraction(case.residual) < Fraction(1, 10**29)


def test_rational_backend_runs_exact_identities():
    ctx = QContext(backend="rational", q=Fraction(1, 3))
    assert check_case(IdentityId.SYM_GEN_THM23, {"a": 3, "b": 5, "m": 4, "x": 2}, ctx).passed
    assert check_case(IdentityId.FUNCEQ, {"s": -3, "x": 1}, ctx).passed


def test_literal_twist_differs_only_when_alpha_is_not_one():
    params = {"a": 1, "b": 3, "m": 3, "x": 1}
    assert check_case(IdentityId.SYM_S_THM25, {**params, "alpha": 1}, EXACT, literal=True).passed
    assert not check_case(IdentityId.SYM_S_THM25, {**params, "alpha": 2}, EXACT, literal=True).passed
    assert check_case(IdentityId.SYM_S_THM25, {**params, "alpha": 2}, EXACT).passed


def test_cor22_is_soft():
    assert IDENTITIES[IdentityId.COR22].soft
    case = check_case(IdentityId.COR22, {"s": "2.5", "x": 1}, NUMERIC)
    assert not case.gated


def test_invalid_cases():
    with pytest.raises(ParityViolation):
        check_case(IdentityId.SYM_GEN_THM23, {"a": 2, "b": 3, "m": 1, "x": 0}, EXACT)
    with pytest.raises(BackendUnsupported):
        check_case(IdentityId.INTERPOLATION, {"n": 1, "x": 1}, EXACT)
    with pytest.raises(BackendUnsupported):
        check_case(IdentityId.CLASSICAL_COR26, {"a": 1, "b": 3, "m": 2, "x": 0}, NUMERIC)
    rep = verify_identity(IdentityId.SYM_GEN_THM23, {"a,b": [(2, 3), (1, 3)], "m": [2], "x": [0]},
                          EXACT, on_invalid="skip")
    assert [c.status for c in rep.cases] == ["skipped-invalid", "pass"]
    assert rep.gate_pass and rep.summary["skipped"] == 1


def test_forced_failure_through_gate():
    # a gate below the working precision cannot be met
    rep = verify_identity(IdentityId.FUNCEQ, {"s": ["2.5"], "x": [1]}, NUMERIC, gate=Fraction(1, 10**60))
    assert not rep.gate_pass


def test_parallel_grid_matches_serial():
    grid = {"a,b": [(1, 3), (3, 5)], "m": [2, 3], "x": [1]}
    a = verify_identity(IdentityId.SYM_GEN_THM23, grid, EXACT)
    b = verify_identity(IdentityId.SYM_GEN_THM23, grid, EXACT, jobs=2)
    assert a.to_dict() == b.to_dict()


def test_smoke_suite_passes_and_round_trips():
    rep = run_suite(smoke_suite())
    assert rep.passed
    assert len(rep.identities) == len(IdentityId)
    assert SuiteReport.from_json(rep.to_json()) == rep
    one = rep.identities[0]
    assert IdentityReport.from_dict(one.to_dict()) == one


def test_suite_restriction():
    rep = run_suite(smoke_suite(), identities=["FUNCEQ", IdentityId.RECURRENCE])
    assert [r.identity for r in rep.identities] == ["RECURRENCE", "FUNCEQ"]


def test_literal_suite_fails():
    rep = run_suite(default_suite(thm25_literal=True), identities=["SYM_S_THM25"])
    assert not rep.passed
    assert all(c.passed for c in rep.identities[0].cases if c.params["alpha"] == 1)


def test_default_suite_keeps_literal_as_soft_extra():
    entries = default_suite().entries
    thm25 = [e for e in entries if e.identity is IdentityId.SYM_S_THM25]
    assert [(e.literal, bool(e.soft)) for e in thm25] == [(False, False), (True, True)]


def test_bad_configs():
    with pytest.raises(ConfigInvalid):
        suite_by_name("nope")
    with pytest.raises(ConfigInvalid):
        run_suite("default")
    bad = SuiteConfig("x", [SuiteEntry(IdentityId.RECURRENCE, {"m": [1]}, backend="quantum")])
    with pytest.raises(ConfigInvalid):
        run_suite(bad)
