from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcongr.polycore import LaurentPoly, Poly, cyclotomic, laurent_mul, poly_ext_gcd, q_integer

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(small, max_size=7).map(Poly)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Poly()


@given(polys, polys)
def test_divrem_identity(f, g):
    if not g:
        return
    quo, rem = f.divrem(g)
    assert quo * g + rem == f
    assert not rem or rem.degree < g.degree


@settings(max_examples=60)
@given(polys, polys)
def test_bezout(f, g):
    if not f and not g:
        return
    d, u, v = poly_ext_gcd(f, g)
    assert u * f + v * g == d
    assert d.lead() == 1
    if f:
        assert not f.divrem(d)[1]
    if g:
        assert not g.divrem(d)[1]


def test_small_cyclotomics():
    assert cyclotomic(1) == Poly([-1, 1])
    assert cyclotomic(2) == Poly([1, 1])
    assert cyclotomic(4) == Poly([1, 0, 1])
    assert cyclotomic(6) == Poly([1, -1, 1])
    assert cyclotomic(12) == Poly([1, 0, -1, 0, 1])
    # first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    assert min(cyclotomic(105).coeffs) == -2


@pytest.mark.parametrize("n", [1, 6, 15, 30, 45, 64])
def test_cyclotomic_product(n):
    prod = Poly([1])
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == Poly([-1] + [0] * (n - 1) + [1])


def test_q_integer():
    assert q_integer(1) == Poly([1])
    assert q_integer(4) == Poly([1, 1, 1, 1])
    assert q_integer(6) == cyclotomic(2) * cyclotomic(3) * cyclotomic(6)


def test_mul_binomial_and_shift():
    f = Poly([1, 2])
    assert f.mul_binomial(3, 2) == f * Poly([1, 0, -3])
    assert f.shift(3) == f * Poly.monomial(3)
    with pytest.raises(ValueError):
        Poly.monomial(-1)


@given(st.lists(small, max_size=5), st.integers(-6, 6), st.lists(small, max_size=5),
       st.integers(-6, 6))
def test_laurent_product_matches_evaluation(a, s, b, t):
    f = LaurentPoly.of(Poly(a)) * LaurentPoly.monomial(s)
    g = LaurentPoly.of(Poly(b)) * LaurentPoly.monomial(t)
    x = Fraction(3, 2)
    assert laurent_mul(f, g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
