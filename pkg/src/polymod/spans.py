"""Vectorization of polynomials and seed tuples for exact span arithmetic.

Monomials x^i y^n are enumerated in graded order, higher total degree first
and higher x-power first within a grade, so reduced bases and pivots are
deterministic. Vector entries are coordinate coefficients (the factorial
convention's f_n coefficients), which is a diagonal rescale of monomial
coefficients and therefore spans the same lattice of subspaces.
"""

from __future__ import annotations

from .linalg import kernel_basis, reduce_against, rref
from .poly import BiPoly, UniPoly
from .scalars import CoeffQ

_Z = CoeffQ(0)


class PolyFrame:
    """Fixed monomial frame for a set of BiPoly values."""

    __slots__ = ("deg_x", "deg_y", "index")

    def __init__(self, polys):
        dx = 0
        dy = 0
        for p in polys:
            if not p.is_zero():
                dx = max(dx, int(p.deg_x))
                dy = max(dy, int(p.deg_y))
        self.deg_x = dx
        self.deg_y = dy
        cells = [(i, n) for n in range(dy + 1) for i in range(dx + 1)]
        cells.sort(key=lambda c: (-(c[0] + c[1]), -c[0]))
        self.index = {c: k for k, c in enumerate(cells)}

    def __len__(self):
        return len(self.index)

    def to_vec(self, p: BiPoly):
        v = [_Z] * len(self.index)
        for n, f in enumerate(p.coords):
            for i, c in enumerate(f.coeffs):
                if not c.is_zero():
                    v[self.index[(i, n)]] = c
        return v

    def from_vec(self, v) -> BiPoly:
        coords = [[_Z] * (self.deg_x + 1) for _ in range(self.deg_y + 1)]
        for (i, n), k in self.index.items():
            if not v[k].is_zero():
                coords[n][i] = v[k]
        return BiPoly(coords)

    def high_degree_positions(self, bound: int):
        """Vector positions of monomials with x-power >= bound."""
        return [k for (i, _n), k in self.index.items() if i >= bound]


def span_reduce(polys, cancel=None):
    """Deterministic reduced basis of the span of polys."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    frame = PolyFrame(polys)
    rows, _ = rref([frame.to_vec(p) for p in polys], cancel=cancel)
    return [frame.from_vec(r) for r in rows]


def in_span(p: BiPoly, basis, return_combo: bool = False):
    """Exact membership of p in span(basis); basis need not be reduced."""
    if p.is_zero():
        return (True, []) if return_combo else True
    frame = PolyFrame(list(basis) + [p])
    rows, pivots = rref([frame.to_vec(b) for b in basis])
    residual, combo = reduce_against(frame.to_vec(p), rows, pivots)
    ok = all(c.is_zero() for c in residual)
    if return_combo:
        return ok, (combo if ok else None)
    return ok


def restrict_degree(polys, bound: int):
    """Reduced basis of {p in span(polys) : deg_x p < bound}.

    Cancellations across generators are honored: the cut is computed on the
    joint span, not per generator.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    frame = PolyFrame(polys)
    rows, _ = rref([frame.to_vec(p) for p in polys])
    high = frame.high_degree_positions(bound)
    if not high:
        return [frame.from_vec(r) for r in rows]
    # combos c with sum_r c_r * rows[r] vanishing on every high position
    eqs = [[rows[r][h] for r in range(len(rows))] for h in high]
    combos = kernel_basis(eqs, ncols=len(rows))
    picked = []
    for c in combos:
        v = [_Z] * len(frame)
        for r, cr in enumerate(c):
            if not cr.is_zero():
                row = rows[r]
                v = [a + cr * b for a, b in zip(v, row)]
        picked.append(v)
    red, _ = rref(picked)
    return [frame.from_vec(r) for r in red]


class TupleFrame:
    """Fixed frame for s-tuples of UniPoly with x-degree < bound per slot."""

    __slots__ = ("s", "bound", "index")

    def __init__(self, s: int, bound: int):
        self.s = s
        self.bound = bound
        cells = [(i, m) for m in range(bound) for i in range(s)]
        cells.sort(key=lambda c: (-c[1], c[0]))
        self.index = {c: k for k, c in enumerate(cells)}

    def __len__(self):
        return len(self.index)

    def to_vec(self, tup):
        v = [_Z] * len(self.index)
        for i, f in enumerate(tup):
            if f.degree != float("-inf") and f.degree >= self.bound:
                raise ValueError("tuple component exceeds frame degree bound")
            for m, c in enumerate(f.coeffs):
                if not c.is_zero():
                    v[self.index[(i, m)]] = c
        return v

    def from_vec(self, v):
        comps = [[_Z] * self.bound for _ in range(self.s)]
        for (i, m), k in self.index.items():
            if not v[k].is_zero():
                comps[i][m] = v[k]
        return tuple(UniPoly(c) for c in comps)


def tuple_span_reduce(tuples, s: int, bound: int):
    tuples = [t for t in tuples if any(not f.is_zero() for f in t)]
    if not tuples:
        return []
    frame = TupleFrame(s, bound)
    rows, _ = rref([frame.to_vec(t) for t in tuples])
    return [frame.from_vec(r) for r in rows]
