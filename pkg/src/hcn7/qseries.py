"""Truncated q-series with exact rational coefficients.

A QSeries holds the coefficients a(0)..a(order) of a formal power series
sum_n a(n) q^n.  Coefficients beyond the truncation order are unknown, not
zero: binary operations return the minimum of the operand orders and never
fabricate terms.  All coefficients are fractions.Fraction, so every
operation is exact and equality is structural.

The coefficient operators provided here act purely on exponents and
coefficient values:

    op_u(f, M)        a(M n) re-indexed to n
    op_dilate(f, M)   a(n) moved to exponent M n   (q -> q^M)
    op_sieve(f, M, r) keep exponents n == r (mod M)
    op_twist(f, chi)  multiply a(n) by chi(n)

Dilation grows the order by a factor M; the growth is capped by the
HCN_MAX_ORDER environment variable (default 3000) to bound memory.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

# Exact rational scalar; every series coefficient is one of these.
ExactRational = Fraction

_ZERO = Fraction(0)

DEFAULT_MAX_ORDER = 3000


def max_order() -> int:
    """Cap on series expansion by dilation, overridable via HCN_MAX_ORDER."""
    return int(os.environ.get("HCN_MAX_ORDER", DEFAULT_MAX_ORDER))


class QSeries:
    """Immutable truncated power series in q."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs):
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", len(cs) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([_ZERO] * (order + 1))

    @classmethod
    def from_terms(cls, order: int, terms: dict[int, ExactRational]) -> "QSeries":
        """Series of the given order with the listed exponent -> value terms."""
        coeffs = [_ZERO] * (order + 1)
        for n, c in terms.items():
            if not 0 <= n <= order:
                raise ValueError(f"exponent {n} outside 0..{order}")
            coeffs[n] = Fraction(c)
        return cls(coeffs)

    def __getitem__(self, n: int) -> ExactRational:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} unknown beyond order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QSeries") -> "QSeries":
        return series_add(self, other)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return series_sub(self, other)

    def __neg__(self) -> "QSeries":
        return series_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    def __rmul__(self, scalar) -> "QSeries":
        return series_scale(self, scalar)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"QSeries(order={self.order}, [{head}{tail}])"


def series_add(f: QSeries, g: QSeries) -> QSeries:
    """Coefficientwise sum, truncated to the shorter operand."""
    order = min(f.order, g.order)
    return QSeries([f.coeffs[n] + g.coeffs[n] for n in range(order + 1)])


def series_sub(f: QSeries, g: QSeries) -> QSeries:
    order = min(f.order, g.order)
    return QSeries([f.coeffs[n] - g.coeffs[n] for n in range(order + 1)])


def series_scale(f: QSeries, c) -> QSeries:
    c = Fraction(c)
    return QSeries([c * a for a in f.coeffs])


def series_truncate(f: QSeries, order: int) -> QSeries:
    if order > f.order:
        raise ValueError(f"cannot extend order {f.order} to {order}")
    return QSeries(f.coeffs[: order + 1])


def _nonzeros(coeffs, upto: int) -> int:
    return sum(1 for c in coeffs[: upto + 1] if c)


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    """Cauchy product up to min(f.order, g.order).

    The sparser operand drives the outer loop, which makes products with
    theta-like series (few nonzero terms) cheap.
    """
    order = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    if _nonzeros(a, order) > _nonzeros(b, order):
        a, b = b, a
    out = [_ZERO] * (order + 1)
    for i in range(order + 1):
        c = a[i]
        if not c:
            continue
        for j in range(order - i + 1):
            d = b[j]
            if d:
                out[i + j] += c * d
    return QSeries(out)


def series_qderiv(f: QSeries, s: int) -> QSeries:
    """s-fold application of q d/dq: coefficient a(n) becomes n^s a(n)."""
    if s < 0:
        raise ValueError("derivative order must be non-negative")
    if s == 0:
        return f
    return QSeries([(n**s) * c for n, c in enumerate(f.coeffs)])


def gen_binomial(x, r: int) -> ExactRational:
    """Generalized binomial x(x-1)...(x-r+1)/r!, exact for rational x."""
    if r < 0:
        raise ValueError("r must be non-negative")
    num = Fraction(1)
    x = Fraction(x)
    for i in range(r):
        num *= x - i
    return num / math.factorial(r)


def rankin_cohen(f: QSeries, k, g: QSeries, l, n: int) -> QSeries:
    """Bracket sum_{r+s=n} (-1)^s C(k+n-1,r) C(l+n-1,s) f^(s) g^(r).

    k and l are half-integer weights; level n = 0 is the plain product.
    """
    if n < 0:
        raise ValueError("bracket level must be non-negative")
    k = Fraction(k)
    l = Fraction(l)
    order = min(f.order, g.order)
    out = QSeries.zero(order)
    for r in range(n + 1):
        s = n - r
        coeff = gen_binomial(k + n - 1, r) * gen_binomial(l + n - 1, s)
        if s % 2:
            coeff = -coeff
        if not coeff:
            continue
        term = series_mul(series_qderiv(f, s), series_qderiv(g, r))
        out = series_add(out, series_scale(term, coeff))
    return out


def op_u(f: QSeries, M: int) -> QSeries:
    """Extract every M-th coefficient: a(M n) at index n."""
    if M < 1:
        raise ValueError("M must be positive")
    if M == 1:
        return f
    return QSeries([f.coeffs[M * n] for n in range(f.order // M + 1)])


def op_dilate(f: QSeries, M: int) -> QSeries:
    """Substitute q -> q^M: a(n) moves to exponent M n, zeros elsewhere.

    The resulting order is f.order * M, capped at max_order().
    """
    if M < 1:
        raise ValueError("M must be positive")
    if M == 1:
        return f
    order = min(f.order * M, max_order())
    out = [_ZERO] * (order + 1)
    for n, c in enumerate(f.coeffs):
        e = n * M
        if e > order:
            break
        out[e] = c
    return QSeries(out)


def op_sieve(f: QSeries, M: int, r: int) -> QSeries:
    """Keep coefficients at exponents n == r (mod M), zero the rest."""
    if M < 1:
        raise ValueError("M must be positive")
    r %= M
    return QSeries(
        [c if n % M == r else _ZERO for n, c in enumerate(f.coeffs)]
    )


def op_twist(f: QSeries, chi: "DirichletCharacter") -> QSeries:
    """Multiply the coefficient at n by chi(n)."""
    return QSeries([chi(n) * c for n, c in enumerate(f.coeffs)])


class DirichletCharacter:
    """Periodic completely multiplicative map on residues, zero off units."""

    __slots__ = ("modulus", "values")

    def __init__(self, modulus: int, values):
        values = tuple(int(v) for v in values)
        if modulus < 1 or len(values) != modulus:
            raise ValueError("need exactly one value per residue class")
        for r in range(modulus):
            if math.gcd(r, modulus) > 1 and values[r] != 0:
                raise ValueError(f"nonzero value at non-unit residue {r}")
        units = [r for r in range(modulus) if math.gcd(r, modulus) == 1]
        for r in units:
            for s in units:
                if values[r * s % modulus] != values[r] * values[s]:
                    raise ValueError("values are not completely multiplicative")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("DirichletCharacter is immutable")

    def __call__(self, n: int) -> int:
        return self.values[n % self.modulus]

    def is_odd(self) -> bool:
        return self(-1) == -1

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.modulus, self.values))

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, {list(self.values)})"

    @classmethod
    def principal(cls, modulus: int) -> "DirichletCharacter":
        return cls(
            modulus,
            [1 if math.gcd(r, modulus) == 1 else 0 for r in range(modulus)],
        )


# The quadratic character mod 7: +1 on {1,2,4}, -1 on {3,5,6}, 0 on 7Z.
_CHI_MINUS7 = DirichletCharacter(7, [0, 1, 1, -1, 1, -1, -1])


def chi_minus7() -> DirichletCharacter:
    """The non-principal real character mod 7 (odd: chi(-1) = -1)."""
    return _CHI_MINUS7
