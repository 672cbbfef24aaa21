"""Recovering recursion tables from spaces, orders, and nilpotent structure.

Inference inverts generation: a differentiation-closed span whose elements
are pinned by their first s coordinates admits at most one operator table of
support j <= deg_bound reproducing coordinate s, and an exact linear solve
recovers it layer by derivative layer. Order probes search for the smallest
prefix length that pins elements, for a single space or for a sum of two
generated spaces. The nilpotent machinery decomposes the coordinatewise
derivative acting on truncated seed-tuple quotients into shift chains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cancel import CancelToken
from .errors import ArityMismatch, NotAnLModule, NotNilpotent, Underdetermined, UnsupportedExpr
from .gamma import GammaTable, generate
from .linalg import identity, is_zero_matrix, kernel_basis, mat_mul, mat_vec, rank, reduce_against, rref, solve
from .modules import MGamma, Md, Sum, contains, phi
from .poly import BiPoly, UniPoly
from .scalars import CoeffQ
from .spans import PolyFrame, span_reduce

_Z = CoeffQ(0)


def _prefix_kernel_witness(basis, s: int):
    """A nonzero span element vanishing in coordinates 0..s-1, or None."""
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        return None
    frame = PolyFrame(basis)
    vecs = [frame.to_vec(b) for b in basis]
    prefix_pos = [k for (_i, n), k in frame.index.items() if n < s]
    eqs = [[v[k] for v in vecs] for k in prefix_pos]
    combos = kernel_basis(eqs, ncols=len(vecs))
    for c in combos:
        elem = BiPoly.zero()
        for ci, b in zip(c, basis):
            if not ci.is_zero():
                elem = elem + b.scale(ci)
        if not elem.is_zero():
            return elem
    return None


def order_of_module(basis, deg_bound: int) -> int | None:
    """Smallest s <= deg_bound with no nonzero span element vanishing on the
    first s coordinates; None if every s up to the bound fails."""
    if deg_bound < 1:
        raise ValueError("deg_bound must be >= 1")
    reduced = span_reduce(list(basis))
    for s in range(1, deg_bound + 1):
        if _prefix_kernel_witness(reduced, s) is None:
            return s
    return None


def infer_L(basis, s: int, deg_bound: int, cancel: CancelToken | None = None) -> GammaTable:
    """Recover the unique width-s table with support j <= deg_bound that
    reproduces coordinate s on the whole span.

    Raises NotAnLModule when the span has a nonzero element with zero seed
    prefix (coordinate s is then not a function of the prefix) or when no
    table of the given shape is consistent with the span. Raises
    Underdetermined when the span is too small to pin every coefficient slot;
    the error lists the free (i, j) slots.
    """
    if not isinstance(s, int) or s < 1:
        raise ValueError("s must be a positive int")
    if deg_bound < 1:
        raise ValueError("deg_bound must be >= 1")
    reduced = span_reduce(list(basis))
    witness = _prefix_kernel_witness(reduced, s)
    if witness is not None:
        raise NotAnLModule(
            "a nonzero element of the span vanishes in its first "
            f"{s} coordinates, so coordinate {s} is not determined by the seed prefix",
            witness=witness,
        )
    # unknowns a_{i,j} ordered layer by layer: j ascending, then i ascending
    slots = [(i, j) for j in range(1, deg_bound + 1) for i in range(1, s + 1)]
    col = {slot: k for k, slot in enumerate(slots)}
    rows = []
    rhs = []
    for F in reduced:
        if cancel is not None:
            cancel.check()
        prefix = phi(F, s)
        target = F.coord(s)
        derivs = {}
        max_m = 0
        for (i, j) in slots:
            dP = prefix[i - 1].derivative(j)
            derivs[(i, j)] = dP
            if not dP.is_zero():
                max_m = max(max_m, int(dP.degree))
        if not target.is_zero():
            max_m = max(max_m, int(target.degree))
        for m in range(max_m + 1):
            row = [_Z] * len(slots)
            for slot in slots:
                c = derivs[slot].coeff(m)
                if not c.is_zero():
                    row[col[slot]] = c
            rows.append(row)
            rhs.append(target.coeff(m))
    if not rows:
        raise Underdetermined("the span pins no coefficient slot", free_slots=slots)
    sol = solve(rows, rhs)
    if sol is None:
        raise NotAnLModule(
            "no operator table of the requested shape reproduces coordinate "
            f"{s} across the span within the truncation"
        )
    values, free_cols = sol
    if free_cols:
        raise Underdetermined(
            "the span leaves coefficient slots free",
            free_slots=[slots[c] for c in free_cols],
        )
    entries = {slot: values[col[slot]] for slot in slots if not values[col[slot]].is_zero()}
    return GammaTable(s, entries)


@dataclass(frozen=True)
class SumOrderReport:
    order: int
    deg_bound: int
    kernel_dim: int
    refuted: tuple  # (K, witness BiPoly) for each K < order


def order_of_sum_report(g1: GammaTable, g2: GammaTable, deg_bound: int, cancel: CancelToken | None = None) -> SumOrderReport:
    """Smallest K such that every sum F + G (F from g1's space, G from g2's,
    seeds of degree < deg_bound) vanishing in coordinates 0..K-1 is zero.

    Coordinates are compared exactly on the fully generated polynomials; only
    the seed degree is truncated, and the report records that bound.
    """
    if deg_bound < 1:
        raise ValueError("deg_bound must be >= 1")
    gens: list[BiPoly] = []
    for g in (g1, g2):
        for i in range(1, g.s + 1):
            for m in range(deg_bound):
                seeds = [UniPoly.zero()] * g.s
                seeds[i - 1] = UniPoly.monomial(m)
                gens.append(generate(g, seeds, cancel=cancel))
    frame = PolyFrame(gens)
    vecs = [frame.to_vec(p) for p in gens]
    positions_by_n: dict[int, list[int]] = {}
    for (_i, n), k in frame.index.items():
        positions_by_n.setdefault(n, []).append(k)
    max_n = max(positions_by_n, default=-1)
    full_rows = [[v[k] for v in vecs] for ps in positions_by_n.values() for k in ps]
    refuted = []
    for K in range(1, max_n + 3):
        if cancel is not None:
            cancel.check()
        prefix_rows = [
            [v[k] for v in vecs]
            for n, ps in positions_by_n.items()
            if n < K
            for k in ps
        ]
        combos = kernel_basis(prefix_rows, ncols=len(vecs))
        kernel_dim = len(combos)
        bad = None
        for c in combos:
            if any(not e.is_zero() for e in mat_vec(full_rows, c)):
                bad = c
                break
        if bad is None:
            return SumOrderReport(order=K, deg_bound=deg_bound, kernel_dim=kernel_dim, refuted=tuple(refuted))
        elem = BiPoly.zero()
        for ci, p in zip(bad, gens):
            if not ci.is_zero():
                elem = elem + p.scale(ci)
        refuted.append((K, elem))
    raise AssertionError("unreachable: K above the top coordinate always pins the sum")


def order_of_sum(g1: GammaTable, g2: GammaTable, deg_bound: int, cancel: CancelToken | None = None) -> int:
    return order_of_sum_report(g1, g2, deg_bound, cancel=cancel).order


@dataclass(frozen=True)
class ChainDecomposition:
    dim: int
    chains: tuple  # ((generator vector, length), ...)
    basis_vectors: tuple  # concatenation of D^j u per chain, in selection order


def _coerce_matrix(mat):
    rows = [[CoeffQ.of(c) for c in row] for row in mat]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return rows


def nilpotent_chains(mat, cancel: CancelToken | None = None) -> ChainDecomposition:
    """Decompose a nilpotent matrix into shift chains D^j u.

    Generators are chosen greedily from the highest nilpotency index down;
    within one index, candidates are taken in the deterministic order of the
    reduced kernel basis. Raises NotNilpotent if D^dim != 0.
    """
    D = _coerce_matrix(mat)
    n = len(D)
    if n == 0:
        return ChainDecomposition(dim=0, chains=(), basis_vectors=())
    powers = [identity(n)]
    p = None
    for k in range(1, n + 1):
        if cancel is not None:
            cancel.check()
        powers.append(mat_mul(powers[-1], D))
        if is_zero_matrix(powers[-1]):
            p = k
            break
    if p is None:
        raise NotNilpotent(f"matrix is not nilpotent: D^{n} != 0")
    kernels = [kernel_basis(powers[k], ncols=n) for k in range(p + 1)]
    chains: list[tuple[tuple, int]] = []
    for k in range(p, 0, -1):
        # U = ker D^{k-1} + height-k vectors of already chosen chains
        U = [list(v) for v in kernels[k - 1]]
        for u, length in chains:
            U.append(mat_vec(powers[length - k], list(u)))
        red, pivots = rref(U)
        for cand in kernels[k]:
            if cancel is not None:
                cancel.check()
            residual, _ = reduce_against(list(cand), red, pivots)
            if any(not c.is_zero() for c in residual):
                chains.append((tuple(cand), k))
                red, pivots = rref(red + [list(cand)])
    basis_vectors = []
    for u, length in chains:
        v = list(u)
        for _ in range(length):
            basis_vectors.append(tuple(v))
            v = mat_vec(D, v)
        if any(not c.is_zero() for c in v):
            raise AssertionError("chain does not terminate at zero")
    if len(basis_vectors) != n or rank([list(v) for v in basis_vectors]) != n:
        raise AssertionError("chain vectors do not form a basis")
    return ChainDecomposition(dim=n, chains=tuple(chains), basis_vectors=tuple(basis_vectors))


def quotient_derivation(s: int, k: int, d: int):
    """Matrix of the componentwise x-derivative on (tuples of degree < k)
    modulo (tuples of degree < d), over all width-s seed tuples.

    Basis cosets are x^m in slot i, ordered slot-major with m ascending.
    The result is nilpotent of index k - d.
    """
    if not isinstance(s, int) or s < 1:
        raise ValueError("s must be a positive int")
    if not (isinstance(k, int) and isinstance(d, int) and k > d >= 0):
        raise ValueError("need k > d >= 0")
    width = k - d
    size = s * width

    def idx(i: int, m: int) -> int:
        return (i - 1) * width + (m - d)

    mat = [[_Z] * size for _ in range(size)]
    for i in range(1, s + 1):
        for m in range(d + 1, k):
            mat[idx(i, m - 1)][idx(i, m)] = CoeffQ(m)
    return mat


def canonical_split(M, cancel: CancelToken | None = None) -> tuple[int, int]:
    """Recover (d, t) from a Sum(Md(d), MGamma(g)) expression by probing
    excluded monomials: d is the smallest e with x^e y^t outside the sum for
    some t <= g.s + 1, and t is the smallest such exponent at that e.

    The answer depends only on the space, not on the expression: monomials
    x^e y^t with e < d always lie in the sum, and x^d y^t first drops out at
    t = the generated part's order.
    """
    if not isinstance(M, Sum) or len(M.parts) != 2:
        raise UnsupportedExpr("canonical_split needs Sum(Md, MGamma)")
    mds = [p for p in M.parts if isinstance(p, Md)]
    gammas = [p for p in M.parts if isinstance(p, MGamma)]
    if len(mds) != 1 or len(gammas) != 1:
        raise UnsupportedExpr("canonical_split needs Sum(Md, MGamma)")
    d = mds[0].d
    g = gammas[0].gamma
    for e in range(d + 1):
        if cancel is not None:
            cancel.check()
        for t in range(g.s + 2):
            probe = BiPoly.monomial(e, t)
            if not contains(M, probe, cancel=cancel).contains:
                return (e, t)
    raise AssertionError("unreachable: the excluded monomial exists at e = d")
