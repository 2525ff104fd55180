"""Periodic-point polynomials, multiplier spectra, and derivative identities."""

import random

import pytest

from commdyn.errors import NotAPowerError, PreconditionError
from commdyn.parsing import parse_map
from commdyn.periodic import (
    common_fixed_points,
    exact_period_polynomial,
    logarithmic_degree,
    multiplier_spectrum,
    periodic_polynomial,
    verify_multiplier_identity,
)
from commdyn.polynomial import Polynomial, gcd_univariate
from commdyn.ratmap import RationalMap, random_mobius

E2_U = parse_map("(z^2 - 4)/(z - 1)")
E2_V = parse_map("(z^2 + 2)/(z + 1)")
E2_F = E2_U.compose(E2_V)
E2_SIGMA = parse_map("zeta3 * z")
E2_G = E2_V.compose(E2_U)
E2_H = E2_V.compose(E2_SIGMA).compose(E2_U)


def _poly(*coeffs: int) -> Polynomial:
    return Polynomial.from_ints(list(coeffs))


def random_equal_degree_map(rng: random.Random) -> RationalMap:
    """Seeded draw with numerator and denominator of the same degree.

    Equal degrees keep infinity off the fixed locus of every iterate, so
    the affine periodic polynomial carries the full point count.
    """
    d = rng.choice([2, 3])
    while True:
        num = [rng.randint(-5, 5) for _ in range(d + 1)]
        den = [rng.randint(-5, 5) for _ in range(d + 1)]
        if num[-1] == 0 or den[-1] == 0:
            continue
        f = RationalMap(Polynomial.from_ints(num), Polynomial.from_ints(den))
        if f.degree == d and f.num.degree == d and f.den.degree == d:
            return f


class TestPeriodicPolynomial:
    def test_squaring_fixed_points(self):
        spec = periodic_polynomial(parse_map("z^2"), 1)
        assert spec.phi == _poly(0, -1, 1)
        assert spec.infinity_is_periodic
        assert spec.phi.degree + 1 == 3

    def test_degree_two_chebyshev_fixed_points(self):
        spec = periodic_polynomial(parse_map("z^2 - 2"), 1)
        assert spec.phi == _poly(-2, -1, 1)
        assert spec.infinity_is_periodic

    def test_squaring_period_two_count(self):
        spec = periodic_polynomial(parse_map("z^2"), 2)
        assert spec.phi.degree + int(spec.infinity_is_periodic) == 5

    def test_exact_period_two_of_squaring(self):
        spec = exact_period_polynomial(parse_map("z^2"), 2)
        assert spec.phi == _poly(1, 1, 1)
        assert not spec.infinity_is_periodic

    def test_divisor_containment(self):
        f = parse_map("z^2 - 1")
        low = periodic_polynomial(f, 1).phi
        high = periodic_polynomial(f, 2).phi
        assert gcd_univariate(high, low) == low


class TestMultiplierSpectrum:
    def test_squaring(self):
        assert multiplier_spectrum(parse_map("z^2"), 1) == _poly(0, 0, -2, 1)

    def test_degree_two_chebyshev(self):
        assert multiplier_spectrum(parse_map("z^2 - 2"), 1) == _poly(0, -8, -2, 1)

    def test_degree_count(self):
        f = parse_map("(z^3 + 1)/(z^2 + 3)")
        assert multiplier_spectrum(f, 1).degree == f.degree + 1

    def test_conjugation_invariance(self):
        f = parse_map("z^2 - 1")
        m = random_mobius(5)
        assert multiplier_spectrum(f.conjugate(m), 2) == multiplier_spectrum(f, 2)


class TestMultiplierIdentity:
    def test_rotation_preserves_multipliers(self):
        assert verify_multiplier_identity(E2_F, E2_SIGMA, 1, 1)

    def test_equal_pair(self):
        assert verify_multiplier_identity(E2_G, E2_G, 1, 1)

    def test_power_maps(self):
        assert verify_multiplier_identity(parse_map("z^2"), parse_map("z^3"), 1, 1)

    def test_non_commuting_rejected(self):
        with pytest.raises(PreconditionError):
            verify_multiplier_identity(parse_map("z^2"), parse_map("z + 1"), 1, 1)


class TestCommonFixedPoints:
    def test_equal_maps_share_everything(self):
        shared, inf = common_fixed_points(parse_map("z^2"), parse_map("z^2"))
        assert shared == _poly(0, -1, 1)
        assert inf

    def test_squaring_and_chebyshev_share_only_infinity(self):
        shared, inf = common_fixed_points(parse_map("z^2"), parse_map("z^2 - 2"))
        assert shared.degree == 0
        assert inf

    def test_example_pair_shares_two_points(self):
        shared, inf = common_fixed_points(E2_G, E2_H)
        assert shared == _poly(-2, 1)
        assert inf
        assert shared.degree + int(inf) == 2


class TestPeriodicCounts:
    def test_twenty_seeded_maps(self):
        rng = random.Random(20260822)
        for _ in range(20):
            f = random_equal_degree_map(rng)
            n = rng.randint(1, 3)
            spec = periodic_polynomial(f, n)
            total = spec.phi.degree + int(spec.infinity_is_periodic)
            assert total == f.degree ** n + 1


class TestLogarithmicDegree:
    def test_square_reference(self):
        assert logarithmic_degree(4, 8) == (2, 3)

    def test_mixed_reference_is_its_own_root(self):
        assert logarithmic_degree(12, 12) == (12, 1)

    def test_cube_reference(self):
        assert logarithmic_degree(8, 2) == (2, 1)

    def test_non_power_rejected(self):
        with pytest.raises(NotAPowerError):
            logarithmic_degree(9, 10)
