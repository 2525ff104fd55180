"""Exact periodic-point machinery.

Fixed and periodic points of a rational self-map are carried as a single
polynomial per period, with a separate flag absorbing the point at
infinity.  Multiplier spectra come out of resultant elimination instead
of any factorization: the multipliers of all period-n points are the
roots of one monic polynomial, assembled by evaluating the eliminant at
integer samples and interpolating.  The derivative-invariance identity
along a commuting map is checked as exact polynomial divisibility.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    NotAPowerError,
    PreconditionError,
    RetryExhausted,
)
from .exactfield import rational
from .polynomial import (
    Polynomial,
    gcd_univariate,
    lagrange_interpolate,
    resultant,
)
from .ratmap import RationalMap, point_sort_key, random_mobius
from .ritt import _prime_exponents


@dataclass(frozen=True)
class PeriodicSpectrum:
    """Period-n point data: defining polynomial, infinity flag, multipliers.

    The affine period-n points are the roots of phi (with multiplicity);
    infinity_is_periodic records the one point the polynomial cannot see.
    Their total is deg(f)^n + 1 whenever infinity is a simple point of
    the fixed locus.  multiplier_poly is filled in by the spectrum
    computation and stays None for plain periodic-point queries.
    """

    n: int
    phi: Polynomial
    infinity_is_periodic: bool
    multiplier_poly: Optional[Polynomial] = None


def periodic_polynomial(f: RationalMap, n: int,
                        degree_cap: int = 5000) -> PeriodicSpectrum:
    """Monic polynomial vanishing on the affine points of period dividing n.

    With f^n = F/G reduced, the fixed-point equation is z*G(z) = F(z);
    infinity is fixed exactly when deg F exceeds deg G.
    """
    it = f.iterate(n, degree_cap)
    fixed = Polynomial.variable(it.num.var) * it.den - it.num
    return PeriodicSpectrum(
        n=n,
        phi=fixed.monic(),
        infinity_is_periodic=it.num.degree > it.den.degree,
    )


def exact_period_polynomial(f: RationalMap, n: int,
                            degree_cap: int = 5000) -> PeriodicSpectrum:
    """Period-n polynomial with every proper-divisor period divided out.

    Quotients by gcd only, so parabolic multiplicity collisions can leave
    a root of lower exact period behind; callers needing certainty should
    verify the period of each root they use.
    """
    spec = periodic_polynomial(f, n, degree_cap)
    phi = spec.phi
    inf_flag = spec.infinity_is_periodic
    for m in range(1, n):
        if n % m != 0:
            continue
        lower = periodic_polynomial(f, m, degree_cap)
        if lower.infinity_is_periodic:
            inf_flag = False
        while True:
            shared = gcd_univariate(phi, lower.phi)
            if shared.degree == 0:
                break
            phi = phi.exact_div(shared)
    return PeriodicSpectrum(n=n, phi=phi.monic(),
                            infinity_is_periodic=inf_flag)


_RETRY_SEEDS = 8


def _integer_samples(count: int):
    k = 0
    for _ in range(count):
        yield rational(k)
        k = -k if k > 0 else -k + 1


def multiplier_spectrum(f: RationalMap, n: int,
                        degree_cap: int = 5000) -> Polynomial:
    """Monic polynomial whose roots are the period-n multipliers of f.

    Multipliers are conjugation-invariant, so a map fixing infinity is
    first moved by a seeded fractional-linear change of coordinates until
    all its period-n points are affine.  Each multiplier (f^n)'(z) then
    appears as a root, with multiplicity, of the eliminant of the
    periodic polynomial against w * D - N, where N/D is the reduced
    derivative of f^n.  The eliminant is recovered from integer samples
    by interpolation; degree deg(f)^n + 1.
    """
    spec = periodic_polynomial(f, n, degree_cap)
    target = f
    if spec.infinity_is_periodic:
        for seed in range(_RETRY_SEEDS):
            candidate = f.conjugate(random_mobius(seed))
            moved = periodic_polynomial(candidate, n, degree_cap)
            if not moved.infinity_is_periodic:
                target, spec = candidate, moved
                break
        else:
            raise RetryExhausted(
                f"no conjugation among {_RETRY_SEEDS} seeds moved all "
                f"period-{n} points into the affine chart")
    derivative = target.iterate(n, degree_cap).derivative()
    num, den = derivative.num, derivative.den
    phi = spec.phi
    xs, ys = [], []
    for w in _integer_samples(phi.degree + 1):
        probe = den.scale(w) - num
        xs.append(w)
        ys.append(resultant(phi, probe))
    return lagrange_interpolate(xs, ys, var="w").monic()


def pow_mod(base: Polynomial, exponent: int, modulus: Polynomial) -> Polynomial:
    result = Polynomial.one(base.var)
    acc = base % modulus
    e = exponent
    while e > 0:
        if e & 1:
            result = (result * acc) % modulus
        acc = (acc * acc) % modulus
        e >>= 1
    return result


def _compose_numerator_mod(poly: Polynomial, gnum: Polynomial,
                           gden: Polynomial, modulus: Polynomial) -> Polynomial:
    """Numerator of poly(g(x)) over gden^deg(poly), reduced mod modulus."""
    d = poly.degree
    acc = Polynomial.constant(poly.coeff(d), poly.var)
    power = Polynomial.one(poly.var)
    for i in range(d - 1, -1, -1):
        power = (power * gden) % modulus
        acc = (acc * gnum + power.scale(poly.coeff(i))) % modulus
    return acc


def _commutes_with(g: RationalMap, fn: RationalMap) -> bool:
    """Certified commutation test that never materializes the composites.

    Both composites have degree at most deg(g) * deg(fn), and two maps of
    degree at most D agreeing at 2D + 1 distinct points are equal, so
    pointwise agreement at enough integers settles it exactly.
    """
    for w in _integer_samples(2 * g.degree * fn.degree + 1):
        left = g.evaluate(fn.evaluate(w))
        right = fn.evaluate(g.evaluate(w))
        if point_sort_key(left) != point_sort_key(right):
            return False
    return True


def verify_multiplier_identity(f: RationalMap, g: RationalMap, n: int, p: int,
                               degree_cap: int = 5000) -> bool:
    """Exact check that (f^{np})' takes equal values at z and g(z) on Per_np.

    The identity holds at every period point of f^{np} where g is neither
    critical nor infinite, as a consequence of differentiating the
    commutation relation there.  Those excluded points are removed from
    the periodic polynomial by repeated gcd division, and the remaining
    divisibility of the difference numerator is tested exactly, with the
    composition through g reduced modulo the periodic polynomial at every
    step to keep degrees down.  The derivative of the big iterate is kept
    unreduced: its spurious common factor only vanishes at poles, which
    are never periodic, so the divisibility test is unaffected and the
    large-degree gcd is avoided.
    """
    fn = f.iterate(n, degree_cap)
    if not _commutes_with(g, fn):
        raise PreconditionError(
            "the second map must commute with the n-th iterate of the first")
    big = fn.iterate(p, degree_cap)
    phi = (Polynomial.variable(big.num.var) * big.den - big.num).monic()
    num = big.num.derivative() * big.den - big.num * big.den.derivative()
    den = big.den * big.den
    for untestable in (g.derivative().num, g.den):
        while True:
            shared = gcd_univariate(phi, untestable)
            if shared.degree == 0:
                break
            phi = phi.exact_div(shared)
    if phi.degree == 0:
        return True
    phi = phi.monic()
    comp_num = _compose_numerator_mod(num, g.num, g.den, phi)
    comp_den = _compose_numerator_mod(den, g.num, g.den, phi)
    # bring both composites over a common power of g's denominator
    width = num.degree - den.degree
    if width > 0:
        comp_den = (comp_den * pow_mod(g.den, width, phi)) % phi
    elif width < 0:
        comp_num = (comp_num * pow_mod(g.den, -width, phi)) % phi
    difference = ((num % phi) * comp_den - comp_num * (den % phi)) % phi
    return difference.is_zero()


def common_fixed_points(f: RationalMap,
                        g: RationalMap) -> tuple[Polynomial, bool]:
    """Monic gcd of the two fixed-point polynomials, plus a shared-infinity flag.

    The gcd degree plus the flag counts common fixed points with
    multiplicity.
    """
    first = periodic_polynomial(f, 1)
    second = periodic_polynomial(g, 1)
    shared = gcd_univariate(first.phi, second.phi)
    both_inf = first.infinity_is_periodic and second.infinity_is_periodic
    return shared, both_inf


def logarithmic_degree(reference_degree: int,
                       query_degree: int) -> tuple[int, int]:
    """Smallest root d0 of the reference degree, and log_{d0} of the query.

    d0 carries the same primes as the reference with exponents divided by
    their gcd, so the reference is d0^k for the largest possible k.
    Raises NotAPowerError when the query is not an exact power of d0.
    """
    if reference_degree < 2 or query_degree < 2:
        raise PreconditionError("both degrees must be at least two")
    exponents = _prime_exponents(reference_degree)
    shrink = math.gcd(*exponents.values())
    d0 = 1
    for prime, alpha in exponents.items():
        d0 *= prime ** (alpha // shrink)
    value, level = d0, 1
    while value < query_degree:
        value *= d0
        level += 1
    if value != query_degree:
        raise NotAPowerError(
            f"{query_degree} is not a power of the degree root {d0}")
    return d0, level
