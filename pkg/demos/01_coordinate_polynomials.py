"""Coordinate polynomials: F(x, y) = sum of f_n(x) y^n / n!.

Storing the rescaled coordinates f_n instead of raw y-coefficients makes
translation in y a plain Taylor mix and keeps every operation exact over
the Gaussian rationals.
"""

from fractions import Fraction

from polymod import BiPoly, CoeffQ, derivative_closure

# G = (x + y)^2, assembled monomial by monomial
G = BiPoly.monomial(2, 0) + BiPoly.monomial(1, 1, 2) + BiPoly.monomial(0, 2)

print("G = (x + y)^2 =", G)
print("coordinates of G (note the factorial rescale: [G]_2 = 2, not 1):")
for n in range(G.num_coords):
    print(f"  [G]_{n} =", G.coord(n))

a, b = CoeffQ.of(Fraction(1, 2)), CoeffQ.of(-3)
p, q = CoeffQ.of(2), CoeffQ.of(Fraction(1, 3))
shifted = G.shift(a, b)
print("\nG shifted by (1/2, -3):", shifted)
print("shifted G at (2, 1/3):  ", shifted.evaluate(p, q))
print("G at (2 + 1/2, 1/3 - 3):", G.evaluate(p + a, q + b))
assert shifted.evaluate(p, q) == G.evaluate(p + a, q + b)

print("\nsmallest differentiation-closed space containing x^2 y:")
basis = derivative_closure([BiPoly.monomial(2, 1)])
for e in basis:
    print("  ", e)
print("dimension:", len(basis))
