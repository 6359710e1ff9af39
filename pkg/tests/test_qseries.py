from fractions import Fraction

import pytest

from qcongr.claims import builtins
from qcongr.qseries import (
    Affine,
    DegenerateDenominator,
    IntegralityViolation,
    NonTerminating,
    PochSpec,
    QAtom,
    SeriesSpec,
    closed_form_series,
    exact_quotient,
    phi_series,
    substitute_qpower,
    sum_numeric,
    sum_symbolic,
)
from qcongr.quotient import LAURENT, NonInvertible, cyclotomic_ring, invert

from oracle import rational_sum


def test_exact_quotient():
    assert exact_quotient(12, 4) == 3
    assert exact_quotient(-6, 3, "(n-1)/d") == -2
    with pytest.raises(IntegralityViolation, match=r"\(n-1\)/\(2\*d\) is not an integer \(3/4\)"):
        exact_quotient(3, 4, "(n-1)/(2*d)")
    with pytest.raises(IntegralityViolation, match="division by zero"):
        exact_quotient(1, 0)


def test_atom_validation():
    with pytest.raises(ValueError):
        QAtom(0)
    with pytest.raises(ValueError):
        QAtom(1, 0, (1, -1, 0, 0))
    assert str(QAtom.var("x", 2, coeff=-1)) == "-x*q^2"


def test_series_description():
    s = builtins.builtin("th-2", d=2, n=5).lhs
    assert s.describe() == "sum_{k=0}^{4} (q;q^2)_k(q;q^2)_k(x;q^2)_k/(q^2;q^2)_k(q^4;q^4)_k q^(2*k)"
    assert s.variables() == {"x"}


def test_closed_forms_need_fixed_lengths():
    with pytest.raises(ValueError):
        closed_form_series([PochSpec(QAtom.q(1), 1, Affine(1, 0))])


@pytest.mark.parametrize("name,params", [("th-2-2", dict(d=2, n=5)), ("th-2-3", dict(d=1, n=5)),
                                         ("in-2", dict(n=9)), ("th-2-0", dict(n=9))])
def test_numeric_sum_matches_oracle(name, params):
    """Reduce the oracle's rational function mod Phi_n^m and compare."""
    claim = builtins.builtin(name, **params)
    R = cyclotomic_ring(claim.modulus.n, claim.modulus.power)
    for side in claim.sides:
        num, den = rational_sum(side)
        assert sum_numeric(side, R) == R.reduce(num) * R.reduce(den) ** -1


def test_symbolic_sum_matches_oracle_at_points():
    claim = builtins.builtin("th-2-4", d=2, n=5)
    R = cyclotomic_ring(5, 2)
    frac = sum_symbolic(claim.lhs, R)
    for x in (Fraction(2), Fraction(-3, 2)):
        num, den = rational_sum(claim.lhs, {"x": x})
        xv = R.constant(x)
        value = frac.num.evaluate({"x": xv}).constant_term() * \
            frac.den.evaluate({"x": xv}).constant_term() ** -1
        assert value == R.reduce(num) * R.reduce(den) ** -1


def test_substitute_qpower():
    s = builtins.builtin("s-5", d=2, s=1, n=5).lhs
    t = substitute_qpower(s, "a", 5)
    assert "a" not in t.variables()
    assert t.num[1].atom == QAtom.q(6)


def test_phi_series_terminating():
    # q-Chu-Vandermonde, 2phi1(q^-n, b; c; q, q) = (c/b; q)_n / (c; q)_n * b^n
    q, b, c, n = Fraction(3), Fraction(5), Fraction(7, 2), 4
    lhs = phi_series([q ** -n, b], [c], 1, q, n, q)
    rhs = Fraction(1)
    for j in range(n):
        rhs *= (1 - c / b * q ** j) / (1 - c * q ** j)
    assert lhs == rhs * b ** n


def test_phi_series_errors():
    with pytest.raises(NonTerminating):
        phi_series([Fraction(2)], [Fraction(5)], 1, Fraction(1, 2), 5, Fraction(3))
    # lower parameter q^-1 kills the denominator at k=1 before termination at k=3
    q = Fraction(2)
    with pytest.raises(DegenerateDenominator):
        phi_series([q ** -3], [q ** -1], 1, q, 3, q)


def test_laurent_units():
    x = LAURENT.qpow(-3).scale(Fraction(2, 5))
    assert x * invert(x) == LAURENT.one
    with pytest.raises(NonInvertible):
        invert(LAURENT.binomial(2, 1))


def test_exact_numeric_sum_needs_unit_denominators():
    s = SeriesSpec((PochSpec(QAtom.q(-3), 1),), (PochSpec(QAtom.q(1), 1),), Affine(1, 0), 3)
    with pytest.raises(NonInvertible):
        sum_numeric(s, LAURENT)
