"""Divisor-sum and theta-type series.

Contents:

    sigma(n, l)              sum of d^l over divisors d of n
    d_series(order)          sum_{n>=1} sigma(n) q^n
    phi_pa / d_pa_series     the two-sided divisor sums
                                 phi_l^(p,a)(n) = sum_{d|n, d<=sqrt(n), d=-a (p)} d^l
                                                + sum_{d|n, d<sqrt(n),  d= a (p)} d^l
    lambda_coeff / lambda_series
                             the correction-series coefficients built from
                             factorizations t^2 - s^2 = n
    prop31_rhs               the divisor-sum form of the corrected series
                             after extracting every 4th coefficient
    theta_mM                 sum over integers n = m (mod M) of q^(n^2)
    theta_chi1               weight-3/2 theta: coefficient chi(x) x at x^2
    psi_k                    lattice sum over x^2 + k y^2 = n of chi(x) x, halved

Everything is exact; square-root boundaries are decided by integer
comparison (d*d <= n), never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .primes import is_prime
from .qseries import (
    DirichletCharacter,
    ExactRational,
    QSeries,
    op_dilate,
    op_sieve,
    series_add,
    series_scale,
    series_truncate,
)


def sigma(n: int, l: int = 1) -> ExactRational:
    """Sum of d^l over the positive divisors d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**l
            e = n // d
            if e != d:
                total += e**l
    return Fraction(total)


def d_series(order: int) -> QSeries:
    """Generating series of sigma(n), with constant term 0."""
    coeffs = [0] * (order + 1)
    for d in range(1, order + 1):
        for n in range(d, order + 1, d):
            coeffs[n] += d
    return QSeries(coeffs)


def phi_pa(n: int, l: int, p: int, a: int) -> ExactRational:
    """Two-sided divisor sum with classes -a (weak boundary) and a (strict).

    Only divisors d with d*d <= n can appear; the cofactor n/d never does.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d:
            continue
        if (d + a) % p == 0:
            total += d**l
        if d * d < n and (d - a) % p == 0:
            total += d**l
    return Fraction(total)


def d_pa_series(l: int, p: int, a: int, order: int) -> QSeries:
    """Series of phi_l^(p,a)(n), built by sieving over factor pairs d*e = n.

    d <= sqrt(n) iff d <= e, and d < sqrt(n) iff d < e, so the boundary
    term (d = e) enters only through the -a class.
    """
    coeffs = [0] * (order + 1)
    for d in range(1, isqrt(order) + 1):
        dl = d**l
        minus = (d + a) % p == 0
        plus = (d - a) % p == 0
        if not (minus or plus):
            continue
        for e in range(d, order // d + 1):
            n = d * e
            if minus:
                coeffs[n] += dl
            if plus and d < e:
                coeffs[n] += dl
    return QSeries(coeffs)


@dataclass(frozen=True)
class LambdaSpec:
    """Parameters (exponent, residue, modulus) of a correction series."""

    l: int
    m: int
    M: int

    def __post_init__(self):
        if self.l < 1 or self.l % 2 == 0:
            raise ValueError("exponent l must be odd and positive")
        if self.M < 1:
            raise ValueError("modulus M must be positive")


def lambda_coeff(spec: LambdaSpec, n: int) -> ExactRational:
    """Coefficient built from factorizations t^2 - s^2 = n.

    Writing n = u v with u <= v of equal parity gives t = (u+v)/2,
    s = (v-u)/2 and contribution (t-s)^l = u^l.  A term with s = 0
    (n a perfect square) carries weight 1/2.  The two sign branches
    t = +m and t = -m (mod M) are both summed even when the residue
    classes coincide, so m = 0 contributes each solution twice.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m, M, l = spec.m, spec.M, spec.l
    doubled = 0
    for u in range(1, isqrt(n) + 1):
        if n % u:
            continue
        v = n // u
        if (u + v) % 2:
            continue
        t = (u + v) // 2
        weight2 = 1 if u == v else 2  # s = 0 exactly when u = v
        value = weight2 * u**l
        if (t - m) % M == 0:
            doubled += value
        if (t + m) % M == 0:
            doubled += value
    return Fraction(doubled, 2)


def lambda_series(spec: LambdaSpec, order: int) -> QSeries:
    """Generating series of lambda_coeff, starting at n = 1."""
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        coeffs[n] = lambda_coeff(spec, n)
    return QSeries(coeffs)


def _lopsided_series(l: int, p: int, m: int, order: int) -> QSeries:
    """sum over pairs d e = n with p | d, d < e and e = +-m (mod p) of d^l.

    This is the residue-class-0 contribution coming from factorizations
    whose p-divisible member is the smaller one; no phi-type divisor sum
    at n or n/p reproduces it because the boundary sits at sqrt(n/p),
    not sqrt(n).
    """
    coeffs = [0] * (order + 1)
    for d in range(p, isqrt(order) + 1, p):
        dl = d**l
        for e in range(d + 1, order // d + 1):
            if (e - m) % p == 0 or (e + m) % p == 0:
                coeffs[d * e] += dl
    return QSeries(coeffs)


def prop31_rhs(k: int, m: int, p: int, order: int) -> QSeries:
    """Divisor-sum expression equal to lambda_series(2k+1, m, p) | U_4.

    For m != 0 (mod p):

        2^(2k+1) [ sum_{a != +-m (p)} (1/2)(D^(p,(m-a)/2) + D^(p,(a-m)/2))
                                          | S_{p,(m^2-a^2)/4}
                   + (1/2)(D^(p,m) + D^(p,-m)) | S_{p,0}
                   + sum_{d e = n, p | d, d < e, e = +-m (p)} d^(2k+1) ]

    and for m == 0 (mod p):

        2^(2k+1) [ sum_{a != 0 (p)} D^(p,a/2) | S_{p,-a^2/4}
                   + p^(2k+1) (D^(1,0) dilated by p^2) ]

    The residue divisions by 2 and 4 are carried out mod p.  On residue
    class 0 the m != 0 case splits by which member of the factor pair is
    divisible by p: the half-sum covers pairs whose smaller member lies
    in class +-m, the lopsided sum those whose smaller member is
    p-divisible.  Both halves (and the dilation reading of the m = 0
    tail) are forced numerically by the factorization side.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    l = 2 * k + 1
    inv2 = pow(2, -1, p)
    inv4 = inv2 * inv2 % p
    m %= p

    total = QSeries.zero(order)
    if m == 0:
        for a in range(1, p):
            term = d_pa_series(l, p, a * inv2 % p, order)
            total = series_add(total, op_sieve(term, p, -a * a * inv4 % p))
        base = d_pa_series(l, 1, 0, -(-order // (p * p)))  # ceil(order / p^2)
        tail = series_truncate(op_dilate(base, p * p), order)
        total = series_add(total, series_scale(tail, p**l))
    else:
        for a in range(p):
            if a == m or a == (-m) % p:
                continue
            half = series_scale(
                series_add(
                    d_pa_series(l, p, (m - a) * inv2 % p, order),
                    d_pa_series(l, p, (a - m) * inv2 % p, order),
                ),
                Fraction(1, 2),
            )
            total = series_add(
                total, op_sieve(half, p, (m * m - a * a) * inv4 % p)
            )
        middle = series_scale(
            series_add(
                d_pa_series(l, p, m, order), d_pa_series(l, p, -m % p, order)
            ),
            Fraction(1, 2),
        )
        total = series_add(total, op_sieve(middle, p, 0))
        total = series_add(total, _lopsided_series(l, p, m, order))
    return series_scale(total, 2**l)


def theta_mM(m: int, M: int, order: int) -> QSeries:
    """Count integers n = m (mod M), both signs, at exponent n^2."""
    if M < 1:
        raise ValueError("M must be positive")
    coeffs = [0] * (order + 1)
    r = isqrt(order)
    for n in range(-r, r + 1):
        if (n - m) % M == 0:
            coeffs[n * n] += 1
    return QSeries(coeffs)


def theta_chi1(chi: DirichletCharacter, order: int) -> QSeries:
    """Halved signed theta (1/2) sum_x chi(x) x q^(x^2) for odd chi.

    For odd chi the x and -x terms agree, so the coefficient at x^2 is
    chi(x) x for x >= 1 and the result has integer coefficients.
    """
    if not chi.is_odd():
        raise ValueError("character must be odd (chi(-1) = -1)")
    coeffs = [0] * (order + 1)
    for x in range(1, isqrt(order) + 1):
        coeffs[x * x] = chi(x) * x
    return QSeries(coeffs)


def psi_k(chi: DirichletCharacter, k: int, order: int) -> QSeries:
    """Halved lattice sum of chi(x) x over x^2 + k y^2 = n, all (x, y).

    Direct enumeration; the +-x pairing absorbs the 1/2 exactly as in
    theta_chi1, while y runs over both signs independently.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if not chi.is_odd():
        raise ValueError("character must be odd (chi(-1) = -1)")
    coeffs = [0] * (order + 1)
    ymax = isqrt(order // k)
    for y in range(-ymax, ymax + 1):
        rest = order - k * y * y
        for x in range(1, isqrt(rest) + 1):
            coeffs[x * x + k * y * y] += chi(x) * x
    return QSeries(coeffs)
