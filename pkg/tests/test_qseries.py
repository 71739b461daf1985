"""Series arithmetic, operators, and their algebraic properties."""

import math
import random
from fractions import Fraction

import pytest

from hcn7.qseries import (
    DirichletCharacter,
    QSeries,
    chi_minus7,
    gen_binomial,
    op_dilate,
    op_sieve,
    op_twist,
    op_u,
    rankin_cohen,
    series_add,
    series_mul,
    series_qderiv,
    series_scale,
    series_sub,
    series_truncate,
)


def rand_series(rng, max_order=200, density=0.5):
    order = rng.randint(0, max_order)
    coeffs = [
        Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if rng.random() < density
        else 0
        for _ in range(order + 1)
    ]
    return QSeries(coeffs)


def test_exact_rational_invariants():
    from hcn7.qseries import ExactRational

    x = ExactRational(6, -8)
    assert x.denominator > 0
    assert (x.numerator, x.denominator) == (-3, 4)  # lowest terms, den > 0
    assert ExactRational(1, 3) + ExactRational(1, 6) == ExactRational(1, 2)


def test_construction_invariants():
    f = QSeries([1, Fraction(1, 2), 0])
    assert f.order == 2 and len(f.coeffs) == f.order + 1
    assert all(isinstance(c, Fraction) for c in f.coeffs)
    with pytest.raises(ValueError):
        QSeries([])
    with pytest.raises(IndexError):
        f[3]
    with pytest.raises(AttributeError):
        f.order = 5


def test_add_examples():
    one_plus = QSeries([1, 1])
    one_minus = QSeries([1, -1])
    assert series_add(one_plus, one_minus) == QSeries([2, 0])
    f = QSeries([3, 1, 4, 1, 5])
    assert series_add(f, QSeries.zero(4)) == f
    # truncation: orders (5, 2) give order 2
    g = series_add(QSeries([0, 1, 1, 0, 0, 0]), QSeries([0, 1, 0]))
    assert g == QSeries([0, 2, 1])


def test_mul_examples():
    assert series_mul(QSeries([1, 1]), QSeries([1, -1])) == QSeries([1, 0])
    f = QSeries([2, 3, 5])
    assert series_mul(f, QSeries([1, 0, 0])) == f
    assert series_mul(QSeries([1, 1, 1]), QSeries([1, 1, 1])) == QSeries([1, 2, 3])


def test_theta_square_counts_lattice_points():
    # theta0^2 counts pairs (a, b) with a^2 + b^2 = n; oracle by enumeration
    order = 10
    theta0 = QSeries.zero(order)
    coeffs = [0] * (order + 1)
    for a in range(-3, 4):
        if a * a <= order:
            coeffs[a * a] += 1
    theta0 = QSeries(coeffs)
    sq = series_mul(theta0, theta0)
    for n in range(order + 1):
        r2 = sum(
            1
            for a in range(-4, 5)
            for b in range(-4, 5)
            if a * a + b * b == n
        )
        assert sq[n] == r2
    assert sq[5] == 8


def test_qderiv():
    f = QSeries([1, 1, 1, 1])
    assert series_qderiv(f, 0) == f
    assert series_qderiv(f, 1) == QSeries([0, 1, 2, 3])
    assert series_qderiv(QSeries([1, 0, 3]), 2) == QSeries([0, 0, 12])


def test_gen_binomial():
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(Fraction(7, 3), 0) == 1
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    # agrees with Pascal's triangle on integers (math.comb is 0 for r > n)
    for n in range(10):
        for r in range(12):
            assert gen_binomial(n, r) == math.comb(n, r)


def test_rankin_cohen_level0_is_product():
    rng = random.Random(7)
    for _ in range(100):
        f = rand_series(rng, max_order=60)
        g = rand_series(rng, max_order=60)
        k = Fraction(rng.randint(1, 6), 2)
        l = Fraction(rng.randint(1, 6), 2)
        assert rankin_cohen(f, k, g, l, 0) == series_mul(f, g)


def test_rankin_cohen_level1_constant_term_vanishes():
    # both terms of the level-1 bracket carry a derivative, killing n = 0
    f = QSeries([Fraction(-1, 12), 0, 0, Fraction(1, 3), Fraction(1, 2)])
    g = QSeries([1, 0, 0, 0, 0])
    b = rankin_cohen(f, Fraction(3, 2), g, Fraction(1, 2), 1)
    assert b[0] == 0


def test_rankin_cohen_bracket_with_one():
    f = QSeries([2, 3, 5, 7])
    one = QSeries([1, 0, 0, 0])
    assert rankin_cohen(f, Fraction(3, 2), one, Fraction(1, 2), 0) == f


def test_op_u():
    f = QSeries([0, 1, 2, 3, 4, 5, 6])
    assert op_u(f, 1) == f
    assert op_u(f, 2) == QSeries([0, 2, 4, 6])
    assert op_u(f, 3) == QSeries([0, 3, 6])


def test_op_dilate():
    f = QSeries([1, 2, 3])
    assert op_dilate(f, 1) == f
    d = op_dilate(f, 3)
    assert d.order == 6
    assert d == QSeries([1, 0, 0, 2, 0, 0, 3])


def test_op_dilate_cap(monkeypatch):
    monkeypatch.setenv("HCN_MAX_ORDER", "10")
    f = QSeries([1] * 8)
    d = op_dilate(f, 4)
    assert d.order == 10
    assert d[0] == 1 and d[4] == 1 and d[8] == 1 and d[5] == 0


def test_op_sieve():
    f = QSeries([1] * 15)
    assert op_sieve(f, 1, 0) == f
    s = op_sieve(f, 7, 3)
    assert [n for n, c in enumerate(s.coeffs) if c] == [3, 10]
    assert op_sieve(f, 7, 10) == s  # residue reduced mod M


def test_op_twist():
    chi = chi_minus7()
    f = QSeries([1] * 10)
    t = op_twist(f, chi)
    assert t[3] == -1 and t[1] == 1 and t[7] == 0
    assert op_twist(f, DirichletCharacter.principal(1)) == f


def test_u_inverts_dilate():
    rng = random.Random(11)
    for _ in range(100):
        f = rand_series(rng, max_order=100)
        M = rng.randint(1, 10)
        assert op_u(op_dilate(f, M), M) == f


def test_sieve_partition():
    rng = random.Random(13)
    for _ in range(100):
        f = rand_series(rng)
        M = rng.randint(1, 12)
        total = QSeries.zero(f.order)
        for r in range(M):
            total = series_add(total, op_sieve(f, M, r))
        assert total == f


def test_double_twist_drops_multiples_of_seven():
    rng = random.Random(17)
    chi = chi_minus7()
    for _ in range(100):
        f = rand_series(rng)
        twice = op_twist(op_twist(f, chi), chi)
        assert twice == series_sub(f, op_sieve(f, 7, 0))


def test_mul_commutative_and_associative():
    rng = random.Random(19)
    for _ in range(60):
        f = rand_series(rng, max_order=40)
        g = rand_series(rng, max_order=40)
        h = rand_series(rng, max_order=40)
        assert series_mul(f, g) == series_mul(g, f)
        assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))


def test_scale_truncate_operators():
    f = QSeries([1, 2, 3, 4])
    assert series_scale(f, Fraction(1, 2)) == QSeries([Fraction(1, 2), 1, Fraction(3, 2), 2])
    assert series_truncate(f, 1) == QSeries([1, 2])
    with pytest.raises(ValueError):
        series_truncate(f, 9)
    assert (f - f) == QSeries.zero(3)
    assert 2 * f == QSeries([2, 4, 6, 8])


def test_character_validation():
    chi = chi_minus7()
    assert chi.modulus == 7 and chi.is_odd()
    assert [chi(n) for n in range(7)] == [0, 1, 1, -1, 1, -1, -1]
    assert chi(-1) == -1 and chi(9) == 1
    with pytest.raises(ValueError):
        DirichletCharacter(7, [0, 1, 1, -1, 1, -1])  # wrong length
    with pytest.raises(ValueError):
        DirichletCharacter(7, [1, 1, 1, -1, 1, -1, -1])  # nonzero at 0
    with pytest.raises(ValueError):
        DirichletCharacter(7, [0, 1, 1, 1, 1, -1, -1])  # not multiplicative
    principal = DirichletCharacter.principal(7)
    assert [principal(n) for n in range(8)] == [0, 1, 1, 1, 1, 1, 1, 0]
    assert not principal.is_odd()
