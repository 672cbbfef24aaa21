"""Differentiation-closed subspaces of C[x,y] and membership probes.

A subspace is translation invariant iff it is closed under both partial
derivatives (characteristic zero), so "module" here always means a
differentiation-closed linear subspace. Module expressions:

    Md(d)         all F whose coordinates have x-degree < d
    MGamma(g)     the space generated by the recursion table g
    FiniteGen(..) span of finitely many polynomials, closed under partials
                  at construction time
    Sum(parts)    pointwise sum of spaces

Membership decisions are exact except where noted: sums that mix several
FiniteGen/MGamma parts are decided against seeds of degree < deg_bound and
the certificate records that truncation. The special shape Md + MGamma is
exact both ways: any recursion tail grown from seeds of degree < d stays of
degree < d (each step strictly drops degree), so F lies in the sum iff the
residual F - generate(g, first s coords of F) lies in Md.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cancel import CancelToken
from .errors import UnsupportedExpr
from .gamma import GammaTable, generate, mgamma_contains
from .poly import NEG_INF, BiPoly, UniPoly
from .scalars import CoeffQ
from .spans import in_span, restrict_degree, span_reduce, tuple_span_reduce
from fractions import Fraction


def derivative_closure(gens, cancel: CancelToken | None = None):
    """Reduced basis of the smallest differentiation-closed space over gens.

    Both partials only lower total degree, so the loop reaches a fixpoint.
    """
    basis = span_reduce(list(gens), cancel=cancel)
    while True:
        if cancel is not None:
            cancel.check()
        images = []
        for f in basis:
            images.append(f.d_dx())
            images.append(f.d_dy())
        bigger = span_reduce(basis + images, cancel=cancel)
        if len(bigger) == len(basis):
            return bigger
        basis = bigger


@dataclass(frozen=True)
class Md:
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 0:
            raise ValueError("Md degree bound must be an int >= 0")


@dataclass(frozen=True)
class MGamma:
    gamma: GammaTable


@dataclass(frozen=True, init=False)
class FiniteGen:
    gens: tuple
    basis: tuple = field(compare=False)

    def __init__(self, gens):
        gens = tuple(gens)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "basis", tuple(derivative_closure(gens)))


@dataclass(frozen=True, init=False)
class Sum:
    parts: tuple

    def __init__(self, *parts):
        if len(parts) == 1 and isinstance(parts[0], (list, tuple)):
            parts = tuple(parts[0])
        flat = []
        for p in parts:
            if isinstance(p, Sum):
                flat.extend(p.parts)
            else:
                flat.append(p)
        if len(flat) < 2:
            raise ValueError("Sum needs at least two parts")
        object.__setattr__(self, "parts", tuple(flat))


@dataclass(frozen=True)
class MembershipResult:
    contains: bool
    certificate: dict

    def __bool__(self):
        return self.contains


@dataclass(frozen=True)
class VSpaceBasis:
    s: int
    deg_bound: int
    tuples: tuple


def phi(F: BiPoly, s: int):
    """The first s coordinates of F, the seed prefix."""
    return tuple(F.coord(n) for n in range(s))


def default_deg_bound(M, F: BiPoly | None = None) -> int:
    vals = [1]
    stack = [M]
    while stack:
        part = stack.pop()
        if isinstance(part, Md):
            vals.append(part.d)
        elif isinstance(part, MGamma):
            vals.append(part.gamma.s)
        elif isinstance(part, FiniteGen):
            for b in part.basis:
                vals.append(int(b.deg_x) if b.deg_x != NEG_INF else 0)
                vals.append(int(b.deg_y) if b.deg_y != NEG_INF else 0)
        elif isinstance(part, Sum):
            stack.extend(part.parts)
    if F is not None and not F.is_zero():
        vals.append(int(F.deg_x))
        vals.append(int(F.deg_y))
    return 1 + max(vals)


def _md_offenders(F: BiPoly, d: int):
    return [
        {"n": n, "deg_x": int(f.degree)}
        for n, f in enumerate(F.coords)
        if f.degree != NEG_INF and f.degree >= d
    ]


def _contains_md(M: Md, F: BiPoly) -> MembershipResult:
    offending = _md_offenders(F, M.d)
    if offending:
        return MembershipResult(False, {"reason": "degree-bound-violated", "d": M.d, "offending": offending})
    return MembershipResult(True, {"reason": "degree-bound", "d": M.d})


def _contains_finite(M: FiniteGen, F: BiPoly) -> MembershipResult:
    ok, combo = in_span(F, list(M.basis), return_combo=True)
    if ok:
        return MembershipResult(True, {"reason": "span-combination", "combination": combo})
    return MembershipResult(False, {"reason": "outside-span", "basis_dim": len(M.basis)})


def _contains_md_plus_gamma(d: int, g: GammaTable, F: BiPoly, cancel) -> MembershipResult:
    completion = generate(g, phi(F, g.s), cancel=cancel)
    residual = F - completion
    offending = _md_offenders(residual, d)
    cert = {
        "reason": "sum-residual",
        "d": d,
        "s": g.s,
        "offending": offending,
        "note": "residual = F minus the recursion completion of F's seed prefix;"
        " seed corrections of x-degree < d only produce tails of x-degree < d",
    }
    return MembershipResult(not offending, cert)


def _sum_candidates(parts, s_probe: int | None, bound: int, cancel) -> tuple[list, bool]:
    """Finite element candidates for the supported sum shapes.

    Returns (candidates, truncated). s_probe, when given, also realizes Md
    parts as single-coordinate elements for the first s_probe slots.
    """
    cands: list[BiPoly] = []
    truncated = False
    for part in parts:
        if cancel is not None:
            cancel.check()
        if isinstance(part, FiniteGen):
            cands.extend(part.basis)
        elif isinstance(part, MGamma):
            truncated = True
            g = part.gamma
            for i in range(1, g.s + 1):
                for m in range(bound):
                    seeds = [UniPoly.zero()] * g.s
                    seeds[i - 1] = UniPoly.monomial(m)
                    cands.append(generate(g, seeds, cancel=cancel))
        elif isinstance(part, Md):
            if s_probe is None:
                raise UnsupportedExpr("Md parts are only supported in Sum(Md, MGamma)")
            for n in range(s_probe):
                for m in range(min(part.d, bound)):
                    coords = [UniPoly.zero()] * n + [UniPoly.monomial(m)]
                    cands.append(BiPoly.from_coords(coords))
        else:
            raise UnsupportedExpr(f"unsupported sum part {type(part).__name__}")
    return cands, truncated


def contains(M, F: BiPoly, deg_bound: int | None = None, cancel: CancelToken | None = None) -> MembershipResult:
    """Decide F in M with a machine-checkable certificate.

    Exact for Md, MGamma, FiniteGen and Sum(Md, MGamma). Sums of several
    FiniteGen/MGamma parts are decided within a seed-degree truncation; a
    positive answer is exact, a negative one is relative to the recorded
    bound. Other shapes raise UnsupportedExpr.
    """
    if isinstance(M, Md):
        return _contains_md(M, F)
    if isinstance(M, MGamma):
        ok, cert = mgamma_contains(M.gamma, F)
        return MembershipResult(ok, cert)
    if isinstance(M, FiniteGen):
        return _contains_finite(M, F)
    if isinstance(M, Sum):
        mds = [p for p in M.parts if isinstance(p, Md)]
        gammas = [p for p in M.parts if isinstance(p, MGamma)]
        if len(M.parts) == 2 and len(mds) == 1 and len(gammas) == 1:
            return _contains_md_plus_gamma(mds[0].d, gammas[0].gamma, F, cancel)
        if all(isinstance(p, (FiniteGen, MGamma)) for p in M.parts):
            bound = deg_bound if deg_bound is not None else default_deg_bound(M, F)
            cands, truncated = _sum_candidates(M.parts, None, bound, cancel)
            ok, combo = in_span(F, cands, return_combo=True)
            cert = {
                "reason": "sum-span" if ok else "sum-span-infeasible",
                "deg_bound": bound,
                "truncated": truncated,
            }
            return MembershipResult(ok, cert)
        raise UnsupportedExpr(
            "supported sums: Sum(Md, MGamma) or sums of FiniteGen/MGamma parts"
        )
    raise UnsupportedExpr(f"unknown module expression {type(M).__name__}")


def v_space(M, s: int, deg_bound: int | None = None, cancel: CancelToken | None = None) -> VSpaceBasis:
    """Row-reduced basis of the seed prefixes {phi(F, s) : F in M, deg_x F < bound}."""
    if not isinstance(s, int) or s < 1:
        raise ValueError("s must be a positive int")
    bound = deg_bound if deg_bound is not None else default_deg_bound(M)
    if bound < 1:
        raise ValueError("deg_bound must be >= 1")
    parts = M.parts if isinstance(M, Sum) else (M,)
    if not all(isinstance(p, (Md, MGamma, FiniteGen)) for p in parts):
        raise UnsupportedExpr("v_space supports Md, MGamma, FiniteGen and their sums")
    cands, _ = _sum_candidates(parts, s, bound, cancel)
    elements = restrict_degree(cands, bound)
    tuples = tuple_span_reduce([phi(F, s) for F in elements], s, bound)
    return VSpaceBasis(s=s, deg_bound=bound, tuples=tuple(tuples))


def is_translation_invariant(gens, samples: int = 3) -> bool:
    """Closure under both partials, cross-checked with exact random shifts.

    The shift draws are deterministic (fixed seed) so reruns agree.
    """
    basis = span_reduce(list(gens))
    if not basis:
        return True
    for f in basis:
        if not in_span(f.d_dx(), basis) or not in_span(f.d_dy(), basis):
            return False
    rng = random.Random(0x5EED)
    for _ in range(samples):
        a = CoeffQ(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2), rng.randint(1, 3)),
        )
        b = CoeffQ(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2), rng.randint(1, 3)),
        )
        for f in basis:
            if not in_span(f.shift(a, b), basis):
                return False
    return True
