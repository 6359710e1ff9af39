from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcongr.claims import Outcome
from qcongr.padlim import (
    NotPAdicInteger,
    ResidueInt,
    gamma_p,
    is_prime,
    limit_suite,
    primes_below,
    rising_factorial_mod,
    van_hamme_sum,
    van_hamme_sum_rational,
    verify_quarter_corollary,
    verify_th3_limit,
    verify_van_hamme,
)

odd_primes = st.sampled_from([5, 7, 11, 13, 29])


def test_primes():
    assert primes_below(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and not is_prime(91)


@given(odd_primes, st.integers(-500, 500), st.integers(1, 50), st.integers(-500, 500))
def test_residue_arithmetic(p, a, b, c):
    x = ResidueInt.of(Fraction(a, b) if b % p else a, p, 2)
    y = ResidueInt.of(c, p, 2)
    assert (x + y) - y == x
    assert (x * y) == (y * x)
    assert x * 1 == x and -(-x) == x


def test_non_integral_rationals_are_rejected():
    with pytest.raises(NotPAdicInteger):
        ResidueInt.of(Fraction(1, 5), 5, 2)
    assert ResidueInt.of(Fraction(1, 2), 5, 2).value * 2 % 25 == 1


@pytest.mark.parametrize("p", [5, 7, 13])
def test_gamma_p_on_integers(p):
    # Gamma_p(n) = (-1)^n prod_{j<n, p does not divide j} j
    for n in range(1, 2 * p):
        prod = 1
        for j in range(1, n):
            if j % p:
                prod *= j
        assert gamma_p(n, p, 2) == ResidueInt.of((-1) ** n * prod, p, 2)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
@pytest.mark.parametrize("x", [Fraction(1, 4), Fraction(1, 2), Fraction(2, 7)])
def test_gamma_p_reflection(p, x):
    if x.denominator % p == 0:
        pytest.skip("not a p-adic integer")
    # Gamma_p(x) Gamma_p(1-x) = (-1)^{a0}, a0 the residue of x in {1..p}
    a0 = ResidueInt.of(x, p, 1).value or p
    assert gamma_p(x, p, 2) * gamma_p(1 - x, p, 2) == ResidueInt((-1) ** a0, p, 2)


def test_rising_factorial():
    assert rising_factorial_mod(1, 6, 11, 2) == ResidueInt.of(factorial(6), 11, 2)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19])
def test_modular_and_rational_sums_agree(p):
    assert van_hamme_sum(p) == ResidueInt.of(van_hamme_sum_rational(p), p, 2)


def test_van_hamme_signs():
    # the sum is -Gamma_p(1/4)^4 for p = 1 mod 4
    assert verify_van_hamme(13, sign=-1).passed
    assert verify_van_hamme(13).outcome is Outcome.FAIL
    assert verify_van_hamme(7).passed and verify_van_hamme(7, sign=-1).passed
    assert verify_van_hamme(9).outcome is Outcome.HYPOTHESIS_FAIL


def test_other_limits():
    assert verify_quarter_corollary(19).passed
    assert verify_quarter_corollary(13).outcome is Outcome.HYPOTHESIS_FAIL
    assert verify_th3_limit(13, 3, 1).passed
    assert verify_th3_limit(11, 3, 1).outcome is Outcome.HYPOTHESIS_FAIL
    with pytest.raises(ValueError):
        verify_th3_limit(13, 3, 0)


def test_suite_is_deterministic():
    a = limit_suite(30, 40, 40)
    assert a == limit_suite(30, 40, 40)
    assert [r.claim for r in a][:3] == ["in-1", "in-1", "in-1"]
