"""Nilpotent chain decomposition of the differentiation action.

On seed tuples of bounded degree, componentwise differentiation is
nilpotent; nilpotent_chains() splits any such matrix into shift chains
u, Du, D^2 u, ... and the decomposition reconstructs the matrix exactly.
"""

from polymod import nilpotent_chains, quotient_derivation

D = quotient_derivation(s=1, k=3, d=0)  # d/dx on span{1, x, x^2}
print("derivative matrix on 1, x, x^2 (columns act on basis cosets):")
for row in D:
    print("  ", [str(c) for c in row])

dec = nilpotent_chains(D)
print("\nchain lengths:", [length for _u, length in dec.chains])
print("chain generators (coordinates in the 1, x, x^2 basis):")
for u, length in dec.chains:
    print("  length", length, "generator", [str(c) for c in u])

# a single length-3 chain: x^2 -> 2x -> 2 -> 0 up to scale
assert [length for _u, length in dec.chains] == [3]

Q = quotient_derivation(s=2, k=3, d=1)  # two slots, degrees 1..2 mod constants
dec2 = nilpotent_chains(Q)
print("\ntwo-slot quotient (degree < 3 mod degree < 1): chain lengths",
      sorted(length for _u, length in dec2.chains))
