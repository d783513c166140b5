"""
Exact arithmetic in cyclotomic fields
=====================================

Character values live in Q(zeta_n). Everything below is exact.
"""

from helpline.cyclo import CyclotomicNumber, absolute_trace, quadratic_surd, root_of_unity

z5 = root_of_unity(5)
print("zeta_5 =", z5)

# the four primitive fifth roots add up to -1
print("sum of primitive 5th roots:", z5 + z5**2 + z5**3 + z5**4)

# the golden ratio sits in Q(zeta_5)
phi = (1 + quadratic_surd(5)) / 2
print("golden ratio:", phi, "~", phi.to_complex().real)
print("phi^2 - phi - 1 =", phi * phi - phi - 1)

# numbers shrink to their smallest field automatically
x = root_of_unity(6) - 1
print("zeta_6 - 1 lives in Q(zeta_%d): %s" % (x.conductor, x))

# traces down to Q, the workhorse of multiplicity formulas
for p, q in [(5, 2), (7, 3)]:
    t = absolute_trace(root_of_unity(p, -1), p * q)
    print(f"Tr_Q(zeta_{p * q})/Q(zeta_{p}^-1) = {t}")

# values round-trip through JSON as strings of rationals
print(CyclotomicNumber.from_json(phi.to_json()) == phi, phi.to_json())
