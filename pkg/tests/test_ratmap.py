"""Map algebra: composition, iteration, commutation, conjugation."""

import pytest
from hypothesis import given, settings, strategies as st

from commdyn.errors import BudgetError, PreconditionError
from commdyn.exactfield import rational, zeta
from commdyn.parsing import parse_function, parse_map
from commdyn.ratmap import (
    INF,
    Mobius,
    RationalMap,
    is_inf,
    mobius_three_points,
    random_mobius,
)


def test_compose_quartic_factors():
    u = parse_map("(z^2 - 4)/(z - 1)")
    v = parse_map("(z^2 + 2)/(z + 1)")
    f = u.compose(v)
    assert f == parse_map("z*(z^3 - 8)/(z^3 + 1)")
    assert f.degree == 4


def test_iterate_translation():
    f = parse_map("z + 1")
    assert f.iterate(4) == parse_map("z + 4")
    with pytest.raises(BudgetError):
        parse_map("z^2").iterate(13)  # 2^13 > 5000


def test_degree_multiplies_under_composition():
    f = parse_map("(z^2 + 1)/(z - 2)")
    g = parse_map("z^3 - z + 1")
    assert f.compose(g).degree == 6
    assert g.compose(f).degree == 6


def test_commutation_rotation_family():
    # z * g0(z^n) commutes with the rotation by a primitive n-th root
    f = parse_map("z*(z^3 + 1)")     # n = 3, g0 = z + 1
    sigma = RationalMap.polynomial_map(
        parse_function("zeta3 * z").num)
    assert f.commutes(sigma)
    assert not f.commutes(parse_map("z + 1"))


def test_constant_fraction_rejected():
    with pytest.raises(PreconditionError):
        RationalMap.from_function(parse_function("3/4"))


def test_canonical_form_distinguishes_scalings():
    assert parse_map("z^2") != parse_map("2*z^2")
    assert parse_map("(2*z^2 + 2)/(2*z - 2)") == parse_map("(z^2 + 1)/(z - 1)")


def test_zero_function_canonicalizes_fully():
    from commdyn.polynomial import Polynomial
    from commdyn.ratmap import RationalFunction

    zero = RationalFunction(Polynomial.zero(), parse_function("z^3 + 1").num)
    assert zero.is_zero() and zero.is_constant()
    assert zero.den == Polynomial.one()


def test_derivative_quotient_rule():
    v = parse_map("(z^2 + 2)/(z + 1)")
    d = v.derivative()
    assert d == parse_function("(z^2 + 2*z - 2)/(z^2 + 2*z + 1)")


def test_evaluation_with_infinity():
    f = parse_map("z*(z^3 - 8)/(z^3 + 1)")
    assert is_inf(f(INF))                      # top degree wins
    assert f(rational(1)) == rational(-7, 2)
    assert f(rational(0)).is_zero()
    assert is_inf(f(rational(-1)))             # pole
    g = parse_map("(z + 1)/(z^2)")
    assert g(INF).is_zero()
    h = parse_map("(2*z^2 + 1)/(z^2 - 5)")
    assert h(INF) == rational(2)


def test_conjugation_newton_to_square():
    newton = parse_map("(z^2 + 1)/(2*z)")
    m = Mobius.from_map(parse_map("(z + 1)/(1 - z)"))
    assert newton.conjugate(m) == parse_map("z^2")


def test_conjugation_round_trip():
    f = parse_map("(z^3 - 2)/(z + 5)")
    m = random_mobius(3)
    assert f.conjugate(m).conjugate(Mobius.from_map(m.inverse().to_map())) == f


def test_mobius_orders():
    assert Mobius.identity().order() == 1
    assert Mobius.scaling(rational(-1)).order() == 2
    assert Mobius.scaling(zeta(3)).order() == 3
    assert Mobius.scaling(zeta(12)).order() == 12
    assert Mobius.scaling(rational(2)).order() is None
    # an infinite-order parabolic element
    assert Mobius(1, 1, 0, 1).order() is None


def test_mobius_apply_and_inverse():
    m = Mobius(1, 1, 1, -1)  # (z + 1)/(z - 1)
    p = rational(3)
    assert m.inverse().apply(m.apply(p)) == p
    assert m.apply(rational(1)) is INF
    assert m.apply(INF) == rational(1)


def test_mobius_three_points():
    a, b, c = rational(2), rational(5), rational(-1)
    m = mobius_three_points(a, b, c)
    assert m.apply(a).is_zero()
    assert m.apply(b) == rational(1)
    assert is_inf(m.apply(c))
    m2 = mobius_three_points(INF, b, c)
    assert m2.apply(INF).is_zero()
    m3 = mobius_three_points(a, INF, c)
    assert m3.apply(INF) == rational(1)
    m4 = mobius_three_points(a, b, INF)
    assert is_inf(m4.apply(INF))
    with pytest.raises(PreconditionError):
        mobius_three_points(a, a, c)


def test_random_mobius_deterministic():
    assert random_mobius(7) == random_mobius(7)


def test_fiber_polynomial():
    f = parse_map("z^2")
    poly, inf_in = f.fiber_polynomial(rational(4))
    assert [c.as_fraction() for c in poly.coeffs] == [-4, 0, 1]
    assert not inf_in
    poly, inf_in = f.fiber_polynomial(INF)
    assert poly.is_constant() and inf_in


small_maps = st.sampled_from([
    "z^2", "(z^2 + 1)/(2*z)", "z^2 - 2", "(z - 1)/(z + 1)", "z^3 + z",
    "(z^2 - 4)/(z - 1)", "(2*z + 3)/(z - 2)",
])


@settings(max_examples=30, deadline=None)
@given(a=small_maps, b=small_maps, c=small_maps)
def test_composition_associative(a, b, c):
    fa, fb, fc = parse_map(a), parse_map(b), parse_map(c)
    assert fa.compose(fb).compose(fc) == fa.compose(fb.compose(fc))


@settings(max_examples=30, deadline=None)
@given(a=small_maps, seed=st.integers(min_value=0, max_value=50))
def test_conjugation_respects_composition(a, seed):
    f = parse_map(a)
    m = random_mobius(seed)
    lhs = f.compose(f).conjugate(m)
    rhs = f.conjugate(m).compose(f.conjugate(m))
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(a=small_maps, b=small_maps)
def test_chain_rule(a, b):
    f, g = parse_map(a), parse_map(b)
    composed = f.compose(g)
    lhs = composed.derivative()
    rhs = f.derivative().substitute(g) * g.derivative()
    assert lhs == rhs
