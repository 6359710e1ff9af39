"""Slow, independent reference: sums as plain rational functions in q.

Variables are fixed to rationals, every term is kept as an unreduced
numerator/denominator pair of :class:`Poly` (after clearing negative powers
of q), and the Phi_n-adic valuation of ``lhs - rhs`` is read off by repeated
exact division.  Nothing here touches the quotient rings or the engine.
"""

from fractions import Fraction

from qcongr.multipoly import VARIABLES
from qcongr.polycore import Poly, cyclotomic


def _factor(c, e, mono, values):
    """``1 - c q^e mono`` as ``(poly, shift)`` meaning poly * q^shift."""
    v = Fraction(c)
    for name, k in zip(VARIABLES, mono):
        if k:
            v *= Fraction(values[name]) ** k
    if e >= 0:
        return Poly([1] + [0] * (e - 1) + [-v]) if e else Poly([1 - v]), 0
    # 1 - v q^e = q^e (q^-e - v)
    return Poly([-v] + [0] * (-e - 1) + [1]), e


def rational_sum(series, values=None):
    """``(num, den)`` Polys with ``sum == num/den`` exactly."""
    values = values or {}
    total_n, total_d = Poly([0]), Poly([1])
    for k in range(series.top + 1):
        n, d, shift = Poly([series.const]), Poly([1]), series.power(k)
        for name, p in zip(VARIABLES, series.mono):
            if p:
                n = n.scale(Fraction(values[name]) ** p)
        for pochs, up in ((series.num, True), (series.den, False)):
            for spec in pochs:
                for j in range(spec.length(k)):
                    f, s = _factor(*spec.factor(j), values)
                    if up:
                        n, shift = n * f, shift + s
                    else:
                        d, shift = d * f, shift - s
        if not n:
            break       # a numerator factor vanished; every later term is 0 as well
        if not d:
            raise ZeroDivisionError(f"denominator of term {k} vanishes")
        if shift >= 0:
            n = n * Poly.monomial(shift)
        else:
            d = d * Poly.monomial(-shift)
        total_n, total_d = total_n * d + n * total_d, total_d * d
    return total_n, total_d


def phi_valuation(f: Poly, n: int) -> float:
    if not f:
        return float("inf")
    phi, v = cyclotomic(n), 0
    while True:
        quo, rem = f.divrem(phi)
        if rem:
            return v
        f, v = quo, v + 1


def difference_valuation(lhs, rhs, n, values=None) -> float:
    """Phi_n-adic valuation of ``lhs - rhs`` (may be negative)."""
    ln, ld = rational_sum(lhs, values)
    rn, rd = rational_sum(rhs, values)
    return phi_valuation(ln * rd - rn * ld, n) - phi_valuation(ld * rd, n)
