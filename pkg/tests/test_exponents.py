"""Tests for spherical derivative norms, Lyapunov estimates, and cycle exponents."""

import math

import pytest

from commdyn.errors import PreconditionError
from commdyn.exponents import (
    CycleReport,
    LyapunovEstimate,
    characteristic_exponents,
    exceptionality_probe,
    lyapunov_estimate,
    spherical_derivative_norm,
)
from commdyn.parsing import parse_map
from commdyn.ratmap import random_mobius

LOG2 = math.log(2.0)

SQUARE = parse_map("z^2")
CUBE = parse_map("z^3")
CHEB2 = parse_map("z^2 - 2")
BASILICA = parse_map("z^2 - 1")


class TestSphericalNorm:
    def test_squaring_at_one(self):
        # |2z| * (1+1)/(1+1) = 2 on the unit circle
        assert spherical_derivative_norm(SQUARE, 1.0) == pytest.approx(2.0)

    def test_identity_is_isometry(self):
        ident = parse_map("z")
        for z in (0.0, 1.0, 2.5 + 1j, None):
            assert spherical_derivative_norm(ident, z) == pytest.approx(1.0)

    def test_inversion_is_isometry(self):
        inv = parse_map("1/z")
        for z in (0.5, 2.0, 1j, None):
            assert spherical_derivative_norm(inv, z) == pytest.approx(1.0)

    def test_squaring_critical_points(self):
        assert spherical_derivative_norm(SQUARE, 0.0) == pytest.approx(0.0)
        assert spherical_derivative_norm(SQUARE, None) == pytest.approx(0.0)

    def test_chart_consistency_near_unit_circle(self):
        # values just inside and just outside the circle use different charts
        inner = spherical_derivative_norm(CUBE, 0.999)
        outer = spherical_derivative_norm(CUBE, 1.001)
        assert inner == pytest.approx(outer, rel=1e-2)

    def test_large_argument_matches_limit(self):
        # f(z)=z^2 behaves like w -> w^2 near infinity in the inverted chart
        big = spherical_derivative_norm(SQUARE, 1e8)
        assert big == pytest.approx(0.0, abs=1e-6)


class TestLyapunovEstimate:
    def test_power_map_exact(self):
        est = lyapunov_estimate(SQUARE)
        assert isinstance(est, LyapunovEstimate)
        assert abs(est.value - LOG2) < 0.02
        # the measure of maximal entropy is uniform on the circle: every
        # sample contributes exactly log 2, so the spread collapses
        assert est.std_error < 1e-9

    def test_cubic_power_map(self):
        est = lyapunov_estimate(CUBE)
        assert abs(est.value - math.log(3.0)) < 0.02

    def test_chebyshev_deep(self):
        est = lyapunov_estimate(CHEB2, depth=30, breadth=512, seed=7)
        assert abs(est.value - LOG2) < 0.02

    def test_seed_stability(self):
        a = lyapunov_estimate(CHEB2, depth=30, breadth=512, seed=7)
        b = lyapunov_estimate(CHEB2, depth=30, breadth=512, seed=11)
        assert abs(a.value - b.value) < 3.0 * (a.std_error + b.std_error)

    def test_conjugation_invariance(self):
        conj = BASILICA.conjugate(random_mobius(3))
        a = lyapunov_estimate(BASILICA, depth=30, breadth=512, seed=7)
        b = lyapunov_estimate(conj, depth=30, breadth=512, seed=7)
        assert abs(a.value - b.value) < 0.05

    def test_positive_with_margin(self):
        est = lyapunov_estimate(BASILICA, depth=30, breadth=512, seed=7)
        assert est.value > 3.0 * est.std_error

    def test_metadata_recorded(self):
        est = lyapunov_estimate(SQUARE, depth=10, breadth=64, seed=42)
        assert (est.depth, est.breadth, est.seed) == (10, 64, 42)

    def test_degree_one_rejected(self):
        with pytest.raises(PreconditionError):
            lyapunov_estimate(parse_map("z + 1"))


class TestCharacteristicExponents:
    def test_squaring_cycle_count(self):
        # periods 1..5 of z^2: 3 fixed (0, 1, inf), then 1, 2, 3, 6 cycles
        reports = characteristic_exponents(SQUARE, 5)
        assert len(reports) == 15
        assert all(isinstance(r, CycleReport) for r in reports)

    def test_squaring_flat_profile(self):
        reports = characteristic_exponents(SQUARE, 5)
        finite = [r for r in reports if r.chi != float("-inf")]
        assert len(finite) == 13  # 0 and inf are superattracting
        for r in finite:
            assert abs(r.chi - LOG2) < 1e-9

    def test_superattracting_sentinels(self):
        reports = characteristic_exponents(SQUARE, 1)
        flagged = [r for r in reports if r.chi == float("-inf")]
        assert len(flagged) == 2
        assert all(r.multiplier_modulus < 1e-9 for r in flagged)

    def test_basilica_golden_fixed_point(self):
        # the fixed point (1+sqrt5)/2 of z^2-1 has multiplier 1+sqrt5
        reports = characteristic_exponents(BASILICA, 1)
        golden = math.log(1.0 + math.sqrt(5.0))
        close = [r for r in reports if r.chi != float("-inf") and abs(r.chi - golden) < 1e-6]
        assert len(close) == 1
        z = close[0].representative
        assert abs(z - (1.0 + math.sqrt(5.0)) / 2.0) < 1e-6

    def test_basilica_superattracting_two_cycle(self):
        # {0, -1} is a superattracting 2-cycle
        reports = characteristic_exponents(BASILICA, 2)
        flagged = [r for r in reports if r.period == 2 and r.chi == float("-inf")]
        assert len(flagged) == 1

    def test_chebyshev_endpoint_multiplier(self):
        # the Julia endpoint z=2 is fixed with derivative 4
        reports = characteristic_exponents(CHEB2, 1)
        top = max(r.chi for r in reports if r.chi != float("-inf"))
        assert top == pytest.approx(math.log(4.0), abs=1e-9)


class TestExceptionalityProbe:
    def test_squaring_reads_flat(self):
        rep = exceptionality_probe(SQUARE)
        assert rep.count_above == 0
        assert rep.verdict == "consistent with exceptional"

    def test_basilica_reads_nonexceptional(self):
        rep = exceptionality_probe(BASILICA)
        assert rep.count_above >= 1
        assert rep.verdict == "non-exceptional behavior observed"

    def test_chebyshev_endpoint_shows_up(self):
        # flat away from the endpoint: the single fixed point z=2 carries
        # chi = log 4 > L + margin, every other finite cycle sits at log 2
        rep = exceptionality_probe(CHEB2)
        assert rep.count_above == 1
        above = [
            c
            for c in rep.cycles
            if c.chi != float("-inf") and c.chi > rep.lyapunov.value + 0.05
        ]
        assert len(above) == 1
        assert above[0].period == 1
        assert abs(above[0].representative - 2.0) < 1e-6

    def test_probe_carries_estimate(self):
        rep = exceptionality_probe(SQUARE)
        assert abs(rep.lyapunov.value - LOG2) < 0.02
