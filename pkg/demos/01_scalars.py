"""
Exact scalars
=============

Coefficients live in Q[z]/Phi_n tensored with Laurent monomials in named
parameters.  Everything is exact; nothing is ever rounded.
"""
from bpbw.scalar import ScalarContext, cyclotomic_poly, parse_scalar

# a context with one parameter q and a primitive cube root of unity z
ctx = ScalarContext(("q",), zeta_order=3)

a = parse_scalar("2*q^-1 + 1/3", ctx)
b = parse_scalar("q - z", ctx)
print("a      =", a)
print("b      =", b)
print("a * b  =", a * b)

# z^2 has no single-term form: it reduces modulo 1 + z + z^2
print("z^2    =", ctx.zeta(2))
print("1+z+z^2 is zero:", (ctx.one() + ctx.zeta() + ctx.zeta(2)).is_zero())

# units are +-z^k q^e; they are the only scalars allowed as braiding values
print("q^-2 z is a unit:", parse_scalar("q^-2*z", ctx).is_unit())
print("1 + q is a unit:", parse_scalar("1 + q", ctx).is_unit())

# cyclotomic polynomials, constant term first
for n in (1, 2, 3, 4, 6, 12):
    print(f"Phi_{n}:", cyclotomic_poly(n))
