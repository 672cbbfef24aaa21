"""A sequence of recursion spaces whose limit is not one.

Each table has a_1 = 1 and a huge top coefficient a_n = -e_3(n) (a triple
exponential). The generated perturbations G_n(x, y) converge to x uniformly
on boxes of radius e(n), yet x itself satisfies no recursion: the limit of
the spaces escapes the class. Everything below 1 is certified in log-space
upper-bound arithmetic; the numbers are far beyond double precision.
"""

from polymod import sup_bound, surrogate_bridge, verify_e14, witness_x_not_in_M

w = witness_x_not_in_M()
print("x in a recursion space? ->", w.contains)
print("  forced coordinate:", w.certificate["n"],
      "| residual coefficient:", w.certificate["residual_coefficient"])

print("\nlog ratio ln(e_3(n-1)^e(n) / e_3(n)), strictly decreasing:")
for n, v in verify_e14(8):
    print(f"  n = {n:2d}  {str(v)[:28]}")

rep = sup_bound(6)
print("\ncertified sup bound at n = 6 over the box |x|, |y| <= e(6):")
print("  log10 of the bound:", rep.log_total.log10())
print("  below one:", rep.below_one, "| certified:", rep.certified)
print("  side conditions re-checked:", len(rep.conditions),
      "| all hold:", all(c["holds"] for c in rep.conditions))

print("\nexact-vs-log bridge on a small surrogate (a_1 = 1, a_2 = -1000):")
for row in surrogate_bridge({1: "1", 2: "-1000"}):
    print(f"  k = {row['k']}  exact norm = {row['exact']}  "
          f"log10 bound = {row['bound'].log10()}  within: {row['within']}")
