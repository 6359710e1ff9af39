from fractions import Fraction

import pytest

from qcongr.claims import Outcome, builtin, verify
from qcongr.claims.identities import (
    chu_vandermonde_sides,
    identity_suite,
    saalschuetz_sides,
    verify_identity,
)


@pytest.mark.parametrize("name,n", [("ss-0-0", 0), ("ss-0-0", 4), ("ss-0-3", 2)])
def test_grid_identities(name, n):
    r = verify_identity(name, n=n)
    assert r.passed, r.pretty()
    assert r.detail.startswith("points=")


def test_singh_small_sample():
    for r in identity_suite(samples=15, seed=3):
        assert r.passed, r.pretty()
        assert "seed=3" in r.detail


def test_random_is_reproducible():
    a = verify_identity("s-1", samples=10, seed=7)
    b = verify_identity("s-1", samples=10, seed=7)
    assert a == b


def test_wrong_sides_are_caught():
    lhs, rhs = chu_vandermonde_sides(3, Fraction(2), Fraction(5))
    assert lhs.equals(rhs)
    lhs2, _ = chu_vandermonde_sides(3, Fraction(3), Fraction(5))
    assert not lhs2.equals(rhs)
    lhs, rhs = saalschuetz_sides(2, Fraction(2), Fraction(3), Fraction(7))
    assert lhs.equals(rhs)


def test_closed_form_through_engine():
    assert verify_identity("ss-0-2", d=2, n=9).passed
    assert verify(builtin("ss-0-4-final", d=2, n=5)).outcome is Outcome.FAIL
    assert verify(builtin("ss-0-4-final-fixed", d=2, n=5)).passed


def test_argument_errors():
    with pytest.raises(KeyError):
        verify_identity("nope")
    with pytest.raises(TypeError):
        verify_identity("ss-0-0", m=2)
    with pytest.raises(ValueError):
        verify_identity("s-2", N=-1)
