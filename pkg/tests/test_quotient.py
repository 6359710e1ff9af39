from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcongr.polycore import LaurentPoly, Poly, cyclotomic
from qcongr.quotient import (
    LAURENT,
    NonInvertible,
    RingMismatch,
    cyclotomic_ring,
    explicit_ring,
    invert,
    is_unit,
    split_phi,
)
from qcongr.qseries import _view

coef = st.integers(-9, 9)
ring_params = st.sampled_from([(5, 1), (6, 2), (9, 1), (12, 2), (7, 3)])


def elems(ring, data):
    return ring.reduce(Poly(data.draw(st.lists(coef, max_size=2 * ring.dim + 3))))


@settings(max_examples=40)
@given(ring_params, st.data())
def test_ring_axioms(params, data):
    R = cyclotomic_ring(*params)
    a, b, c = elems(R, data), elems(R, data), elems(R, data)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R.zero
    assert a * R.one == a


@settings(max_examples=40)
@given(ring_params, st.data())
def test_reduction_is_a_homomorphism(params, data):
    R = cyclotomic_ring(*params)
    f = Poly(data.draw(st.lists(coef, max_size=20)))
    g = Poly(data.draw(st.lists(coef, max_size=20)))
    assert R.reduce(f * g) == R.reduce(f) * R.reduce(g)
    assert R.reduce(f).residue == f.divrem(R.modulus)[1]


@settings(max_examples=40)
@given(ring_params, st.data())
def test_inverse_methods_agree(params, data):
    R = cyclotomic_ring(*params)
    a = elems(R, data)
    if not is_unit(a):
        with pytest.raises(NonInvertible):
            invert(a)
        return
    inv = invert(a)
    assert a * inv == R.one
    assert invert(a, method="euclid") == inv


def test_zero_divisors_are_not_inverted():
    R = cyclotomic_ring(5, 2)
    phi = R.reduce(cyclotomic(5))
    assert phi and not is_unit(phi)
    with pytest.raises(NonInvertible):
        invert(phi)
    assert phi * phi == R.zero
    with pytest.raises(NonInvertible):
        invert(R.zero)


def test_q_is_a_unit_with_inverse_q_to_the_minus_one():
    R = cyclotomic_ring(7, 2)
    assert R.q * R.qpow(-1) == R.one
    assert R.qpow(7) != R.one            # q^7 = 1 only modulo Phi_7, not Phi_7^2
    assert cyclotomic_ring(7).qpow(7) == cyclotomic_ring(7).one


def test_binomial_valuation_split():
    R = cyclotomic_ring(6, 2)
    v, unit = R.split_binomial(1, 12)    # 1 - q^12 = Phi_6 * (unit)
    assert v == 1 and is_unit(unit)
    assert R.split_binomial(2, 6)[0] == 0
    v, rest = split_phi(LaurentPoly.of(Poly([1, 0, 0, 0, 0, 0, -1])) * LaurentPoly.of(
        Poly([1, 0, 0, 0, 0, 0, -1])), 3)
    assert v == 2


def test_rings_do_not_mix():
    a = cyclotomic_ring(5).one
    b = cyclotomic_ring(7).one
    with pytest.raises(RingMismatch):
        a + b


def test_explicit_ring_uses_euclid():
    R = explicit_ring(Poly([2, 0, 1]))        # q^2 + 2
    a = R.reduce(Poly([1, 1]))
    assert a * invert(a) == R.one


@settings(max_examples=30)
@given(st.sampled_from([5, 9, 12]), st.data())
def test_periodic_view_matches_ring(n, data):
    """Work mod q^n - 1 and project: same result as working mod Phi_n."""
    R = cyclotomic_ring(n)
    view = _view(R)
    a, b = elems(R, data), elems(R, data)
    e = data.draw(st.integers(-3 * n, 3 * n))
    c = data.draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
    pa, pb = view.lift(a), view.lift(b)
    assert view.project(pa * pb) == a * b
    assert view.project(pa + pb.mul_qpow(e)) == a + b.mul_qpow(e)
    assert view.project(pa.axpy(c, e, pb)) == a.axpy(c, e, b)
    assert view.project(pa.mul_binomial(c, e)) == a.mul_binomial(c, e)


def test_laurent_ring():
    x = LAURENT.qpow(-3).mul_binomial(Fraction(1, 2), 4)
    assert x.residue.evaluate(Fraction(2)) == Fraction(1, 8) * (1 - Fraction(1, 2) * 16)
    assert LAURENT.qpow(2) * LAURENT.qpow(-2) == LAURENT.one
