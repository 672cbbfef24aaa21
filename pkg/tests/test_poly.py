from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polymod import BiPoly, CoeffQ, UniPoly
from polymod.poly import NEG_INF

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)
scalars = st.builds(CoeffQ, rationals, rationals)
unipolys = st.lists(scalars, max_size=7).map(UniPoly)
bipolys = st.lists(unipolys, max_size=5).map(BiPoly.from_coords)


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

def test_unipoly_normalization():
    assert UniPoly([1, 0, 0]) == UniPoly([1])
    assert UniPoly([]).is_zero()
    assert UniPoly([0]).is_zero()
    assert UniPoly([]).degree == NEG_INF
    assert UniPoly([0, 0, 3]).degree == 2
    assert UniPoly([0, 0, 3]).lead() == 3


def test_unipoly_derivative():
    f = UniPoly([1, 1, 1, 1])  # 1 + x + x^2 + x^3
    assert f.derivative() == UniPoly([1, 2, 3])
    assert f.derivative(2) == UniPoly([2, 6])
    assert f.derivative(5).is_zero()
    assert f.derivative(0) == f
    with pytest.raises(ValueError):
        f.derivative(-1)


def test_unipoly_shift_exact():
    f = UniPoly.monomial(2)  # x^2
    g = f.shift(1)  # (x+1)^2
    assert g == UniPoly([1, 2, 1])
    assert f.shift(Fraction(1, 2)) == UniPoly([Fraction(1, 4), 1, 1])


def test_unipoly_evaluate_horner():
    f = UniPoly([2, 0, 1])  # 2 + x^2
    assert f.evaluate(Fraction(3, 2)) == CoeffQ(Fraction(17, 4))
    assert f.evaluate(CoeffQ(0, 1)) == CoeffQ(1)  # 2 + i^2


@given(unipolys, rationals, rationals)
def test_unipoly_shift_composes(f, a, b):
    assert f.shift(a).shift(b) == f.shift(a + b)


@given(unipolys, rationals, rationals)
def test_unipoly_shift_evaluates(f, a, p):
    assert f.shift(a).evaluate(p) == f.evaluate(p + a)


@given(unipolys)
def test_unipoly_derivative_commutes_with_shift(f):
    assert f.shift(1).derivative() == f.derivative().shift(1)


# ---------------------------------------------------------------------------
# bivariate: the coordinate convention
# ---------------------------------------------------------------------------

def test_bipoly_monomial_convention():
    # x^2 y^3 has coordinate 3 equal to 3! x^2; everything else zero
    F = BiPoly.monomial(2, 3)
    assert F.coord(3) == UniPoly.monomial(2, 6)
    assert F.coord(0).is_zero() and F.coord(2).is_zero()
    assert F.deg_x == 2 and F.deg_y == 3
    assert F.evaluate(2, 1) == CoeffQ(4)


def test_bipoly_trailing_zero_coords_dropped():
    F = BiPoly.from_coords([UniPoly.x(), UniPoly.zero(), UniPoly.zero()])
    assert F.num_coords == 1


def test_y_derivative_is_index_shift():
    F = BiPoly.from_coords([UniPoly.monomial(2), UniPoly([0, 2]), UniPoly([2])])
    assert F.d_dy() == BiPoly.from_coords([UniPoly([0, 2]), UniPoly([2])])
    assert F.d_dy(2) == BiPoly.from_coords([UniPoly([2])])
    assert F.d_dy(3).is_zero()


def test_x_derivative_coordinatewise():
    F = BiPoly.monomial(2, 1)  # x^2 y
    assert F.d_dx() == BiPoly.monomial(1, 1).scale(2)


def test_taylor_tower_is_shift():
    # from_coords([f, f', f'', ...]) represents f(x + y)
    f = UniPoly([1, -2, 0, 1])  # 1 - 2x + x^3
    coords = [f]
    while not coords[-1].is_zero():
        coords.append(coords[-1].derivative())
    F = BiPoly.from_coords(coords[:-1])
    for p in (0, 1, Fraction(-3, 2)):
        for q in (0, 2, Fraction(1, 3)):
            assert F.evaluate(p, q) == f.evaluate(p + q)


def test_evaluate_uses_factorial_weights():
    # F = y^2 via coordinate 2 = 2: F(.., q) = q^2
    F = BiPoly.from_coords([UniPoly.zero(), UniPoly.zero(), UniPoly.const(2)])
    assert F.evaluate(0, 3) == CoeffQ(9)


@given(bipolys, rationals, rationals, rationals, rationals)
def test_shift_evaluation_identity(F, a, b, p, q):
    assert F.shift(a, b).evaluate(p, q) == F.evaluate(p + a, q + b)


@given(bipolys, rationals, rationals, rationals, rationals)
def test_shift_composition(F, a, b, c, d):
    assert F.shift(a, b).shift(c, d) == F.shift(a + c, b + d)


@given(bipolys)
def test_mixed_partials_commute(F):
    assert F.d_dx().d_dy() == F.d_dy().d_dx()


@given(bipolys, rationals, rationals)
def test_partials_commute_with_shift(F, a, b):
    assert F.shift(a, b).d_dx() == F.d_dx().shift(a, b)
    assert F.shift(a, b).d_dy() == F.d_dy().shift(a, b)


def test_monomial_terms_display_weights():
    F = BiPoly.monomial(1, 2, 5)  # 5 x y^2
    terms = dict(F.monomial_terms())
    assert terms == {(1, 2): CoeffQ(5)}


def test_str_conventional_notation():
    g = BiPoly.from_coords([UniPoly.monomial(2), UniPoly([0, 2]), UniPoly([2])])
    assert str(g) == "x^2 + 2*x*y + y^2"
