"""Weighted (h,q)-Genocchi numbers, the weighted (h,q)-zeta function and
finite-level p-adic q-integrals, with exact and high-precision backends."""

from .errors import QZetaError
from .genocchi import (
    classical_genocchi_poly,
    genocchi_addition_rhs,
    genocchi_number,
    genocchi_oracle,
    genocchi_poly,
    s_classical,
    s_tilde,
)
from .padic import (
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
from .qcore import QContext, QSeries, q_bracket, weighted_bracket
from .serialize import emit, parse
from .verify import (
    IdentityId,
    IdentityReport,
    SuiteReport,
    check_case,
    default_suite,
    run_suite,
    verify_identity,
)
from .zeta import hurwitz_euler, zeta_eval, zeta_neg_int, zeta_value

__version__ = "0.1.0"

__all__ = [
    "QZetaError",
    "QContext",
    "QSeries",
    "q_bracket",
    "weighted_bracket",
    "genocchi_poly",
    "genocchi_number",
    "genocchi_oracle",
    "genocchi_addition_rhs",
    "classical_genocchi_poly",
    "s_tilde",
    "s_classical",
    "zeta_eval",
    "zeta_neg_int",
    "zeta_value",
    "hurwitz_euler",
    "vp",
    "padic_abs",
    "padic_reduce",
    "PadicNumber",
    "qhaar_measure",
    "IntegrandSpec",
    "bosonic_level_integral",
    "fermionic_level_integral",
    "fermionic_target",
    "convergence_report",
    "Report",
    "IdentityId",
    "IdentityReport",
    "SuiteReport",
    "check_case",
    "verify_identity",
    "default_suite",
    "run_suite",
    "emit",
    "parse",
]
