"""Cyclotomic polynomials, the quotient-ring number type, and dense
univariate helpers."""
import random
from fractions import Fraction

import pytest

from logflat import univariate as uv
from logflat.cyclotomic import (CycloNum, candidate_orders, cyclotomic_split,
                                cyclotomic_upoly, euler_phi)
from logflat.multipoly import MultiPoly


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 13)] == \
        [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_upoly_small_orders():
    assert list(cyclotomic_upoly(1)) == [Fraction(-1), Fraction(1)]
    assert list(cyclotomic_upoly(2)) == [Fraction(1), Fraction(1)]
    assert list(cyclotomic_upoly(4)) == [Fraction(1), Fraction(0), Fraction(1)]
    assert list(cyclotomic_upoly(6)) == [Fraction(1), Fraction(-1), Fraction(1)]


def test_product_of_cyclotomics_is_t_power_minus_one():
    for n in (1, 2, 3, 4, 6, 12):
        prod = uv.upoly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = uv.umul(prod, list(cyclotomic_upoly(d)))
        expected = [Fraction(0)] * (n + 1)
        expected[0], expected[n] = Fraction(-1), Fraction(1)
        assert prod == uv.utrim(expected)


def test_cyclotomic_split_peels_cyclotomic_factors():
    t = MultiPoly.var(("t",), "t")
    one = MultiPoly.constant(("t",), 1)
    p = (t - one) * (t * t + one) * (t - 2 * one)
    factors, rem = cyclotomic_split(p)
    assert dict(factors) == {1: 1, 4: 1}
    assert uv.umonic(uv.from_multipoly(rem)) == \
        uv.from_multipoly(t - 2 * one)


def test_candidate_orders_complete_for_small_degree():
    orders = candidate_orders(2)
    for d in (1, 2, 3, 4, 6):
        assert d in orders


def test_cyclonum_field_axioms():
    rng = random.Random(20)
    m = 12
    def rand_num():
        return CycloNum(m, [Fraction(rng.randrange(-3, 4)) for _ in range(4)])
    for _ in range(20):
        a, b = rand_num(), rand_num()
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == CycloNum.rational(m, 1)


def test_zeta_has_exact_order():
    one = CycloNum.rational(6, 1)
    z = CycloNum.zeta(6, 1)
    powers = [one]
    for _ in range(6):
        powers.append(powers[-1] * z)
    assert powers[6] == one
    assert all(powers[k] != one for k in range(1, 6))
    assert powers[3] == CycloNum.rational(6, -1)


def test_univariate_division_and_gcd():
    rng = random.Random(21)
    for _ in range(15):
        a = uv.upoly([Fraction(rng.randrange(-4, 5)) for _ in range(5)])
        b = uv.upoly([Fraction(rng.randrange(-4, 5)) for _ in range(3)])
        if not b:
            continue
        q, r = uv.udivmod(a, b)
        assert uv.uadd(uv.umul(q, b), r) == a
        assert uv.udeg(r) < uv.udeg(b) or not r
        g = uv.ugcd(a, b)
        if a and b:
            _, r1 = uv.udivmod(a, g)
            _, r2 = uv.udivmod(b, g)
            assert not r1 and not r2


def test_ext_gcd_bezout():
    a = uv.upoly([-1, 0, 1])     # t^2 - 1
    b = uv.upoly([1, 1])         # t + 1
    g, s, t = uv.uext_gcd(a, b)
    assert uv.uadd(uv.umul(s, a), uv.umul(t, b)) == g


def test_squarefree_detection():
    sq = uv.umul(uv.upoly([1, 1]), uv.upoly([1, 1]))
    assert not uv.is_squarefree(sq)
    assert uv.is_squarefree(uv.upoly([-1, 0, 1]))
    assert uv.usquarefree(sq) == uv.upoly([1, 1])
