"""Recursion spaces: a coefficient table drives f_n = L(f_{n-s}, ..., f_{n-1}).

generate() runs the recursion until it provably terminates; mgamma_contains()
re-checks any polynomial against the recursion and hands back a certificate
either way.
"""

from polymod import (
    BiPoly,
    CoeffQ,
    GammaTable,
    UniPoly,
    generate,
    mgamma_contains,
    shift_invariance_table,
)

g = shift_invariance_table()  # s = 1, f_n = f_{n-1}'
F = generate(g, [UniPoly([CoeffQ(0), CoeffQ(0), CoeffQ(1)])])  # seed x^2
print("table: s=1, a_{1,1}=1 applied to seed x^2")
print("generated element:", F)

ok, cert = mgamma_contains(g, F)
print("membership of the generated element:", ok, cert)
ok, cert = mgamma_contains(g, BiPoly.monomial(1, 0))
print("membership of plain x:", ok)
print("  rejection certificate:", cert)

# width-2 windows can carry a seed degree for an extra generation: the
# recursion below is still alive at n = 5 even though the seeds have
# degree 2, so only the cutoff n > s * (1 + max seed degree) is safe
wide = GammaTable(2, {(1, 1): CoeffQ.of(1), (2, 1): CoeffQ.of(1)})
x2 = UniPoly([CoeffQ(0), CoeffQ(0), CoeffQ(1)])
W = generate(wide, [x2, x2])
print("\nwidth-2 table, both seeds x^2:")
for n in range(W.num_coords):
    print(f"  [W]_{n} =", W.coord(n))
print("nonzero through n = 5 = s * (1 + 2); the naive cutoff s + 2 = 4 lies")
