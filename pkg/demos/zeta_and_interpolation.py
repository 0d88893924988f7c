"""
The weighted zeta function
==========================

Partial sums with a certified tail, the values at negative integers, and the
q = 1 shadow (the Hurwitz-Euler function).
"""

from fractions import Fraction

from qzeta import QContext, genocchi_poly, hurwitz_euler, zeta_eval, zeta_neg_int

ctx = QContext(backend="numeric", q=Fraction(1, 2), prec=128)
mp = ctx.mp

for s in ("1.5", "2", "3+1i"):
    print(f"zeta({s}, 1) =", mp.nstr(zeta_eval(s, 1, ctx), 25))

###############################################################################
# At s = -n the series sums to a Genocchi polynomial over n + 1.
rational = QContext(backend="rational", q=Fraction(1, 2))
print("zeta(-1, 0) =", zeta_neg_int(1, 0, rational))
for n in range(5):
    summed = zeta_eval(-n, 2, ctx)
    closed = genocchi_poly(n + 1, 2, ctx) / (n + 1)
    print(n, mp.nstr(summed, 20), mp.nstr(abs(summed - closed), 3))

###############################################################################
# q = 1: the alternating Hurwitz sum 2 sum (-1)^m (m + x)^{-s}
print(mp.nstr(hurwitz_euler(2, 1), 30), mp.nstr(mp.pi**2 / 6, 30))
print(mp.nstr(hurwitz_euler(1, 1), 30), mp.nstr(2 * mp.log(2), 30))
