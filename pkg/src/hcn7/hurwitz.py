"""Hurwitz class numbers and their residue-restricted sums.

H(N) is the weighted count of SL2(Z)-classes of integral binary quadratic
forms of discriminant -N: each reduced form (a, b, c) with b^2 - 4ac = -N,
|b| <= a <= c and b >= 0 when |b| = a or a = c contributes 1, except that
forms proportional to x^2 + y^2 count 1/2 and forms proportional to
x^2 + xy + y^2 count 1/3.  By convention H(0) = -1/12 and H(N) = 0 for
N = 1, 2 (mod 4).

Two independent code paths produce H: hurwitz_single enumerates reduced
forms for one N, hurwitz_batch sieves over all (a, b, c) at once.  The
residue-restricted sums

    H_{m,M}(n) = sum over a = m (mod M) of H(4n - a^2)

are likewise computed two ways: hmm_sum by direct summation and
hmm_series as the series product (H-series * theta_{m,M}) with every
4th coefficient extracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import theta_mM
from .qseries import ExactRational, QSeries, max_order, op_u, series_mul


@dataclass(frozen=True)
class HurwitzTable:
    """H(N) for 0 <= N <= n_max, with 12*H(N) always an integer."""

    values: tuple[ExactRational, ...]
    n_max: int

    def __getitem__(self, n: int) -> ExactRational:
        return self.values[n]

    def __len__(self) -> int:
        return self.n_max + 1


def hurwitz_single(N: int) -> ExactRational:
    """H(N) by direct enumeration of reduced forms of discriminant -N."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if N == 0:
        return Fraction(-1, 12)
    if N % 4 in (1, 2):
        return Fraction(0)
    twelfths = 0
    # 3a^2 <= N for reduced forms, and b matches the parity of N.
    for a in range(1, isqrt(N // 3) + 1):
        for b in range(N % 2, a + 1, 2):
            num = b * b + N
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            twelfths += _weight12(a, b, c)
    return Fraction(twelfths, 12)


def _weight12(a: int, b: int, c: int) -> int:
    """12 times the weighted multiplicity of the reduced orbit (a, +-b, c)."""
    if a == b == c:
        return 4  # a(x^2 + xy + y^2)
    if b == 0 and a == c:
        return 6  # a(x^2 + y^2)
    if 0 < b < a < c:
        return 24  # (a, b, c) and (a, -b, c) are distinct reduced forms
    return 12


def hurwitz_batch(n_max: int) -> HurwitzTable:
    """Table of H(N) for N <= n_max via one sieve over reduced forms."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    twelfths = [0] * (n_max + 1)
    twelfths[0] = -1
    for a in range(1, isqrt(n_max // 3) + 1):
        for b in range(a + 1):
            cmax = (n_max + b * b) // (4 * a)
            for c in range(a, cmax + 1):
                twelfths[4 * a * c - b * b] += _weight12(a, b, c)
    values = tuple(Fraction(t, 12) for t in twelfths)
    return HurwitzTable(values, n_max)


# Grown-on-demand cache behind hurwitz_series / hmm_sum; query results
# are pure, the cache only avoids rebuilding tables.
_cache: HurwitzTable = hurwitz_batch(0)


def _table(n_max: int) -> HurwitzTable:
    global _cache
    if _cache.n_max < n_max:
        _cache = hurwitz_batch(max(n_max, 2 * _cache.n_max, 1024))
    return _cache


def hurwitz_series(order: int) -> QSeries:
    """Generating series sum_n H(n) q^n."""
    table = _table(order)
    return QSeries(table.values[: order + 1])


def hmm_sum(m: int, M: int, n: int) -> ExactRational:
    """H_{m,M}(n) summed directly over all integers a = m (mod M)."""
    if M < 1:
        raise ValueError("M must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    table = _table(4 * n)
    r = isqrt(4 * n)
    a = -r + (m + r) % M  # least a >= -r in the residue class
    total = Fraction(0)
    while a * a <= 4 * n:
        total += table[4 * n - a * a]
        a += M
    return total


def hmm_series(m: int, M: int, order: int) -> QSeries:
    """H_{m,M} by the product route: (H-series * theta_{m,M}) | U_4."""
    internal = 4 * order
    if internal > max_order():
        raise ValueError(
            f"internal order {internal} exceeds the cap {max_order()}; "
            "raise HCN_MAX_ORDER to go further"
        )
    product = series_mul(hurwitz_series(internal), theta_mM(m, M, internal))
    return op_u(product, 4)


def hurwitz_kronecker_lhs_rhs(n: int) -> tuple[ExactRational, ExactRational]:
    """Both sides of sum_a H(4n - a^2) = 2 sigma(n) - sum_{d|n} min(d, n/d).

    The two sides are computed independently: the left from the class
    number table, the right from a divisor loop.
    """
    if n < 1:
        raise ValueError("n must be positive")
    lhs = hmm_sum(0, 1, n)
    rhs = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            e = n // d
            # the pair {d, e} contributes 2d + 2e - min - min = 2e (d < e),
            # or 2d - d = d when d = e
            rhs += 2 * e if e != d else d
    return lhs, Fraction(rhs)
