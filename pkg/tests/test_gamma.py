import random

import pytest

from polymod import (
    ArityMismatch,
    BiPoly,
    CoeffQ,
    GammaTable,
    UniPoly,
    apply_L,
    dilated_shift_table,
    generate,
    mgamma_contains,
    shift_invariance_table,
)

from conftest import rand_gamma, rand_unipoly


def _table(s, **entries):
    # entries as a11=..., a22=... keyword shorthand
    parsed = {}
    for key, val in entries.items():
        i, j = int(key[1]), int(key[2])
        parsed[(i, j)] = CoeffQ.of(val)
    return GammaTable(s, parsed)


def test_gamma_table_validation():
    with pytest.raises(ValueError):
        GammaTable(0)
    with pytest.raises(ValueError):
        GammaTable(1, {(2, 1): CoeffQ.of(1)})  # i out of range
    with pytest.raises(ValueError):
        GammaTable(1, {(1, 0): CoeffQ.of(1)})  # j must be >= 1
    g = GammaTable(2, {(1, 1): CoeffQ.of(0), (2, 1): CoeffQ.of(1)})
    assert dict(g.items()) == {(2, 1): CoeffQ.of(1)}  # zero entries elided
    assert g.max_j == 1
    assert GammaTable.zero(3).max_j == 0


def test_apply_l_examples():
    gS = shift_invariance_table()
    assert apply_L(gS, [UniPoly.monomial(2)]) == UniPoly([0, 2])
    g = _table(2, a11=1, a22=3)
    out = apply_L(g, [UniPoly.monomial(3), UniPoly.monomial(2)])
    assert out == UniPoly([6, 0, 3])  # 3x^2 + 6
    assert apply_L(GammaTable.zero(2), [UniPoly.x(), UniPoly.x()]).is_zero()


def test_apply_l_arity():
    with pytest.raises(ArityMismatch):
        apply_L(shift_invariance_table(), [UniPoly.x(), UniPoly.x()])
    with pytest.raises(ArityMismatch):
        generate(_table(2, a11=1), [UniPoly.x()])


def test_generate_taylor_square():
    F = generate(shift_invariance_table(), [UniPoly.monomial(2)])
    assert F == BiPoly.from_coords([UniPoly.monomial(2), UniPoly([0, 2]), UniPoly([2])])
    for p in (0, 1, 2):
        for q in (0, 1, 3):
            assert F.evaluate(p, q) == CoeffQ.of((p + q) ** 2)


def test_generate_dilated_is_substitution():
    F = generate(dilated_shift_table(2), [UniPoly.monomial(2)])
    # f(x + 2y) for f = x^2
    for p in (0, 1, 2):
        for q in (0, 1, 2):
            assert F.evaluate(p, q) == CoeffQ.of((p + 2 * q) ** 2)


def test_generate_constants_fixed():
    F = generate(_table(1, a13=5), [UniPoly.const(7)])
    assert F == BiPoly.embed(UniPoly.const(7))


def test_generate_zero_table_keeps_seeds():
    F = generate(GammaTable.zero(2), [UniPoly.x(), UniPoly.monomial(2)])
    assert F == BiPoly.from_coords([UniPoly.x(), UniPoly.monomial(2)])


def test_generate_linear_in_seeds(rng):
    for _ in range(20):
        g = rand_gamma(rng)
        seeds_a = [rand_unipoly(rng, 4) for _ in range(g.s)]
        seeds_b = [rand_unipoly(rng, 4) for _ in range(g.s)]
        c = CoeffQ.of(rng.randint(-3, 3))
        combined = [fa.scale(c) + fb for fa, fb in zip(seeds_a, seeds_b)]
        lhs = generate(g, combined)
        rhs = generate(g, seeds_a).scale(c) + generate(g, seeds_b)
        assert lhs == rhs


def test_generate_termination_with_window_bound(rng):
    # coordinates vanish beyond s * (1 + max seed degree): the window max
    # degree strictly drops at least once every s steps
    for _ in range(40):
        g = rand_gamma(rng)
        seeds = [rand_unipoly(rng, 5) for _ in range(g.s)]
        F = generate(g, seeds)
        max_deg = max(
            (int(f.degree) for f in seeds if not f.is_zero()), default=-1
        )
        cutoff = g.s * (1 + max(0, max_deg))
        for n in range(cutoff + 1, F.num_coords):
            assert F.coord(n).is_zero()


def test_width_two_recursion_outlives_single_step_cutoff():
    # with s = 2 a coordinate can survive past s + max seed degree: the
    # window carries old degrees forward one extra generation
    g = _table(2, a11=1, a21=1)
    seeds = [UniPoly.monomial(2), UniPoly.monomial(2)]
    F = generate(g, seeds)
    assert F.coord(5) == UniPoly.const(2)  # past 2 + 2 = 4, yet nonzero
    assert F.coord(4) == UniPoly.const(6)
    assert F.coord(3) == UniPoly([4, 2])
    assert all(F.coord(n).is_zero() for n in range(7, 12))


def test_degree_descent_every_window(rng):
    for _ in range(30):
        g = rand_gamma(rng)
        seeds = [rand_unipoly(rng, 4) for _ in range(g.s)]
        F = generate(g, seeds)
        for k in range(g.s, F.num_coords):
            window_max = max(
                F.coord(k - g.s + t).degree for t in range(g.s)
            )
            assert F.coord(k).degree < window_max or (
                F.coord(k).is_zero() and window_max == float("-inf")
            )


def test_mgamma_contains_accepts_generated(rng):
    for _ in range(25):
        g = rand_gamma(rng)
        seeds = [rand_unipoly(rng, 4) for _ in range(g.s)]
        ok, cert = mgamma_contains(g, generate(g, seeds))
        assert ok and cert["reason"] == "recursion-verified"


def test_mgamma_contains_rejects_x_for_first_derivative_table():
    ok, cert = mgamma_contains(_table(1, a11=1), BiPoly.embed(UniPoly.x()))
    assert not ok
    assert cert["n"] == 1
    assert cert["residual"] == UniPoly.const(-1)  # coordinate 1 is 0, forced value 1


def test_mgamma_contains_zero_always():
    ok, _ = mgamma_contains(_table(2, a12=3), BiPoly.zero())
    assert ok


def test_mgamma_contains_checks_past_deg_y_window():
    # F = x y fails the width-2 recursion only at n = 3 = deg_y + s: the
    # probe range must extend s coordinates past the last nonzero one
    g = _table(2, a11=1)
    F = BiPoly.from_coords([UniPoly.zero(), UniPoly.x()])
    ok, cert = mgamma_contains(g, F)
    assert not ok
    assert cert["n"] == 3


def test_shift_invariance_table_shape():
    g = shift_invariance_table()
    assert g.s == 1 and dict(g.items()) == {(1, 1): CoeffQ.of(1)}
    gd = dilated_shift_table(3)
    assert dict(gd.items()) == {(1, 1): CoeffQ.of(3)}
