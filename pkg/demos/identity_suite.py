"""
Checking identities over grids
==============================

Each identity is evaluated case by case; exact backends demand a residual of
exactly zero, the numeric one a residual under ten times the tolerance.
"""

from fractions import Fraction

from qzeta import IdentityId, QContext, run_suite, verify_identity
from qzeta.serialize import emit
from qzeta.verify import smoke_suite

exact = QContext(order=48)
rep = verify_identity(IdentityId.SYM_GEN_THM23, {"a,b": [(1, 3), (3, 5)], "m": range(6), "x": [0, 1]}, exact)
print(emit(rep, "text"))

# the printed twist index of the power-sum symmetry only survives at alpha = 1
grid = {"a,b": [(1, 3)], "m": [3], "x": [1], "alpha": [1, 2]}
print(emit(verify_identity(IdentityId.SYM_S_THM25, grid, exact, literal=True), "csv"))

numeric = QContext(backend="numeric", q=Fraction(1, 2))
print(emit(verify_identity(IdentityId.FUNCEQ, {"s": ["2.5", "1+2i"], "x": [1]}, numeric), "text"))

print(emit(run_suite(smoke_suite()), "text"))
