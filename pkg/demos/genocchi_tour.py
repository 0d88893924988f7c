"""
Weighted Genocchi numbers, three ways
=====================================

The same object as a truncated power series in q, as an exact rational at a
fixed q, and as a 128-bit float.  At q -> 1 everything collapses onto the
ordinary Genocchi numbers 0, 1, -1, 0, 1, 0, -3, 0, 17.
"""

from fractions import Fraction

from qzeta import QContext, classical_genocchi_poly, genocchi_number, genocchi_oracle, genocchi_poly

# a formal series in q, exact through q^12
series = QContext(alpha=2, h=1, order=12)
for n in range(1, 5):
    print(f"G_{n} =", genocchi_number(n, series))

# the closed form and the defining alternating sum agree coefficient by coefficient
assert genocchi_poly(5, 1, series) == genocchi_oracle(5, 1, series)

# exact values at q = 1/2
exact = QContext(alpha=2, h=1, backend="rational", q=Fraction(1, 2))
print([str(genocchi_number(n, exact)) for n in range(6)])

# and the same numbers in floating point
numeric = QContext(alpha=2, h=1, backend="numeric", q=Fraction(1, 2))
print([numeric.mp.nstr(genocchi_number(n, numeric), 12) for n in range(6)])

###############################################################################
# Creeping up on q = 1
# --------------------
near_one = QContext(backend="numeric", q=1 - Fraction(1, 10**6), prec=256)
for n in range(1, 9):
    print(n, near_one.mp.nstr(genocchi_number(n, near_one), 8), classical_genocchi_poly(n, 0))
