"""Module expressions and membership probes.

Md(d) is the space of polynomials with x-degree below d; MGamma wraps a
recursion table; Sum composes parts. contains() decides membership with a
certificate, v_space() lists the seed tuples a space admits, and
canonical_split() recovers the two parameters of a Sum(Md, MGamma) space
from the space alone.
"""

from polymod import (
    BiPoly,
    MGamma,
    Md,
    Sum,
    canonical_split,
    contains,
    shift_invariance_table,
    v_space,
)

g = shift_invariance_table()
M = Sum(Md(1), MGamma(g))

xy = BiPoly.monomial(1, 1)
res = contains(M, xy)
print("is x*y in Md(1) + (recursion space of f_n = f_{n-1}')?")
print("  contains:", res.contains)
print("  certificate:", res.certificate)

y5 = BiPoly.monomial(0, 5)
res = contains(Md(1), y5)
print("\nis y^5 in Md(1)?")
print("  contains:", res.contains, "| reason:", res.certificate["reason"])

print("\nseed tuples admitted by the recursion space (degree < 3):")
vs = v_space(MGamma(g), s=1, deg_bound=3)
for tup in vs.tuples:
    print("  ", tuple(str(f) for f in tup))

d, t = canonical_split(M)
print("\ncanonical_split recovered (d, t) =", (d, t))
assert (d, t) == (1, 1)
