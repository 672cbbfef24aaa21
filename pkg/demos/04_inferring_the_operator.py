"""Operator forensics: recover the recursion table from a basis.

infer_L() solves for the table entries that make every basis element satisfy
the recursion; order_of_sum_report() finds how many leading coordinates pin
an element of a sum of two recursion spaces, with explicit refutation
witnesses below that threshold.
"""

from fractions import Fraction

from polymod import (
    CoeffQ,
    GammaTable,
    UniPoly,
    dilated_shift_table,
    generate,
    infer_L,
    order_of_sum_report,
    shift_invariance_table,
)

hidden = GammaTable(1, {(1, 1): CoeffQ.of(2), (1, 3): CoeffQ.of(Fraction(-1, 3))})
basis = [generate(hidden, [UniPoly.monomial(m)]) for m in range(6)]
recovered = infer_L(basis, s=1, deg_bound=5)
print("hidden table:   ", hidden)
print("recovered table:", recovered)
assert recovered == hidden

rep = order_of_sum_report(shift_invariance_table(), dilated_shift_table(2), 4)
print("\nsum of the shift space and its 2-dilated twin:")
print("  order:", rep.order, "(coordinates 0..%d pin every element)" % (rep.order - 1))
for K, witness in rep.refuted:
    print(f"  K = {K} refuted by a nonzero element vanishing below {K}:", witness)
