"""
Fermionic p-adic integrals, level by level
==========================================

The level-N Riemann sum over Z/p^N is an exact rational.  Its distance to the
closed form shrinks p-adically: about one digit per level, minus a fixed loss.
"""

from fractions import Fraction

from qzeta import IntegrandSpec, convergence_report, padic_reduce, qhaar_measure
from qzeta.serialize import emit

p, q = 5, Fraction(6)

# the q-Haar measure is a distribution: the cosets of p^n Z_p add up to 1
print(sum(qhaar_measure(a, 2, p, q) for a in range(p**2)))

for degree in (1, 3):
    rep = convergence_report(IntegrandSpec(degree, x=1), p, q, 5)
    print(emit(rep, "text"))

# the closed-form target to 6 digits in base 5
rep = convergence_report(IntegrandSpec(2), p, q, 3)
print(padic_reduce(rep.target, p, 6).digits())
