"""Exact linear algebra over Gaussian rationals.

Matrices are lists of row lists of CoeffQ. Reduction is fully deterministic:
columns are scanned left to right and the pivot is the first row with a
nonzero entry (no magnitude heuristics, so reruns are byte-identical).
"""

from __future__ import annotations

from .scalars import CoeffQ

_Z = CoeffQ(0)
_O = CoeffQ(1)


def rref(rows, cancel=None):
    """Reduced row echelon form. Returns (reduced nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        if cancel is not None:
            cancel.check()
        piv = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col]
        if inv != _O:
            rows[r] = [c / inv for c in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def reduce_against(vec, basis_rows, pivots):
    """Reduce vec against an rref basis; returns (residual, combination).

    residual is zero iff vec lies in the row span; combination holds the
    coefficients of the basis rows used.
    """
    vec = list(vec)
    combo = [_Z] * len(basis_rows)
    for r, col in enumerate(pivots):
        f = vec[col]
        if not f.is_zero():
            combo[r] = f
            row = basis_rows[r]
            vec = [a - f * b for a, b in zip(vec, row)]
    return vec, combo


def rank(rows) -> int:
    return len(rref(rows)[0])


def kernel_basis(rows, ncols=None):
    """Basis of {x : A x = 0} for A given by rows; deterministic order."""
    if not rows:
        return [] if not ncols else [
            [(_O if i == j else _Z) for j in range(ncols)] for i in range(ncols)
        ]
    ncols = len(rows[0]) if ncols is None else ncols
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for fc in free:
        v = [_Z] * ncols
        v[fc] = _O
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        out.append(v)
    return out


def solve(rows, rhs):
    """Solve A x = rhs. Returns (solution with free vars 0, free columns) or None.

    None means inconsistent. rows may be empty (then x = 0 works iff rhs empty
    of constraints).
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for r, col in zip(red, pivots):
        if col == ncols:
            return None  # pivot in the rhs column: inconsistent
    x = [_Z] * ncols
    for r, col in zip(red, pivots):
        x[col] = r[ncols]
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    return x, free


def mat_vec(rows, v):
    return [sum((a * b for a, b in zip(r, v)), _Z) for r in rows]


def mat_mul(a, b):
    if not a or not b:
        return []
    n = len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), _Z) for j in range(n)] for i in range(len(a))]


def identity(n):
    return [[_O if i == j else _Z for j in range(n)] for i in range(n)]


def is_zero_matrix(rows) -> bool:
    return all(c.is_zero() for r in rows for c in r)


def transpose(rows):
    if not rows:
        return []
    return [list(col) for col in zip(*rows)]
