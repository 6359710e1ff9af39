"""Classical summation and transformation identities, checked exactly.

Two kinds of check live here:

* ``ss-0-0`` (q-Chu-Vandermonde) and ``ss-0-3`` (q-Saalschuetz) keep ``q``
  symbolic (exact Laurent polynomials) and put the free parameters on a
  rational tensor grid, at least ``n + 1`` (resp. ``2n + 1``) values per
  parameter and never fewer than 20 points;
* ``s-1`` (Singh's quadratic transformation) and its ``d = 0`` case ``s-2``
  are compared as exact rationals at seeded random points, with
  ``q = p**2`` (so that ``sqrt(q)`` is rational) and ``a**2 = q**(-2N)``
  forcing termination.

The closed forms ``ss-0-1`` ... ``ss-0-5`` are ordinary exact-identity claims
and go through :func:`qcongr.claims.verify`.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from typing import Iterable, Sequence

from ..qseries import DegenerateDenominator, phi_series
from ..quotient import LAURENT
from . import builtins
from .model import Outcome, VerificationReport

GRID_IDENTITIES = ("ss-0-0", "ss-0-3")
RANDOM_IDENTITIES = ("s-1", "s-2")
CLOSED_FORMS = ("ss-0-1", "ss-0-2", "ss-0-4", "ss-0-5")
IDENTITIES = GRID_IDENTITIES + RANDOM_IDENTITIES + CLOSED_FORMS

MIN_GRID = 20


def _grid_values(count: int) -> list[Fraction]:
    """Distinct rationals avoiding 0 and 1: 2, -2, 1/2, 3, -3, 1/3, ..."""
    out: list[Fraction] = []
    k = 2
    while len(out) < count:
        for x in (Fraction(k), Fraction(-k), Fraction(1, k)):
            if len(out) < count:
                out.append(x)
        k += 1
    return out


class _Frac:
    """``num / den`` over Q[q, 1/q]; den is a product of binomials, never zero."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num, self.den = num, den

    @classmethod
    def one(cls):
        return cls(LAURENT.one, LAURENT.one)

    def times(self, num: Sequence = (), den: Sequence = (), coeff=1, qexp: int = 0) -> _Frac:
        """Multiply by ``coeff q^qexp prod(1 - c q^e) / prod(1 - c q^e)``."""
        a, b = self.num.mul_qpow(qexp).scale(Fraction(coeff)), self.den
        for c, e in num:
            a = a.mul_binomial(c, e)
        for c, e in den:
            if c == 1 and e == 0:
                raise DegenerateDenominator("denominator factor 1 - q^0")
            b = b.mul_binomial(c, e)
        return _Frac(a, b)

    def __add__(self, other: _Frac) -> _Frac:
        if self.den == other.den:
            return _Frac(self.num + other.num, self.den)
        return _Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    def equals(self, other: _Frac) -> bool:
        return self.num * other.den == other.num * self.den


def _poch(c, e: int, k: int, step: int = 1) -> list[tuple]:
    """Factors of ``(c q^e; q^step)_k`` as ``(coeff, exponent)`` pairs."""
    return [(Fraction(c), e + step * j) for j in range(k)]


def chu_vandermonde_sides(n: int, a: Fraction, c: Fraction) -> tuple[_Frac, _Frac]:
    """``2phi1(a, q^-n; c; q, q)`` and ``(c/a; q)_n / (c; q)_n * a^n``."""
    lhs = _Frac(LAURENT.zero, LAURENT.one)
    for k in range(n + 1):
        lhs = lhs + _Frac.one().times(_poch(a, 0, k) + _poch(1, -n, k),
                                      _poch(1, 1, k) + _poch(c, 0, k), qexp=k)
    rhs = _Frac.one().times(_poch(c / a, 0, n), _poch(c, 0, n), coeff=a ** n)
    return lhs, rhs


def saalschuetz_sides(n: int, a: Fraction, b: Fraction, c: Fraction) -> tuple[_Frac, _Frac]:
    """``3phi2(q^-n, a, b; c, q^(1-n) ab/c; q, q)`` and its product evaluation."""
    lhs = _Frac(LAURENT.zero, LAURENT.one)
    for k in range(n + 1):
        lhs = lhs + _Frac.one().times(
            _poch(1, -n, k) + _poch(a, 0, k) + _poch(b, 0, k),
            _poch(1, 1, k) + _poch(c, 0, k) + _poch(a * b / c, 1 - n, k), qexp=k)
    rhs = _Frac.one().times(_poch(c / a, 0, n) + _poch(c / b, 0, n),
                            _poch(c, 0, n) + _poch(c / (a * b), 0, n))
    return lhs, rhs


def _grid_check(name: str, n: int, per_axis: int, axes: int, sides) -> tuple[str | None, int]:
    """First failing point (or None) and the number of points compared."""
    size = max(per_axis, 2)
    while size ** axes < MIN_GRID:
        size += 1
    vals = _grid_values(size)
    count = 0
    for point in itertools.product(vals, repeat=axes):
        try:
            lhs, rhs = sides(n, *point)
        except (DegenerateDenominator, ZeroDivisionError):
            continue
        count += 1
        if not lhs.equals(rhs):
            return f"at {','.join(map(str, point))}: sides differ", count
    return None, count


def singh_sides(N: int, p: Fraction, b: Fraction, c: Fraction, d: Fraction | None):
    """Both sides of Singh's transformation (``d is None`` gives the 3phi2 case).

    ``q = p**2`` and ``a = q**(-N)`` so ``a**2 = q**(-2N)`` terminates the left
    side after ``2N`` terms and the right side (base ``q**2``) after ``N``.
    """
    q = p * p
    a = q ** -N
    ab_sqrt_q = a * b * p
    others = [b * b, c] + ([] if d is None else [d])
    lower = [ab_sqrt_q, -ab_sqrt_q] + ([] if d is None else [-c * d])
    others2 = [b * b, c * c] + ([] if d is None else [d * d])
    lower2 = [a * a * b * b * q] + ([] if d is None else [-c * d, -c * d * q])
    if not (_generic(others, lower, q, 2 * N) and _generic(others2, lower2, q * q, N)):
        raise DegenerateDenominator("specialization sits on a removable singularity")
    if d is None:
        lhs = phi_series([a * a, b * b, c], [ab_sqrt_q, -ab_sqrt_q], 1, q, 2 * N, q)
        rhs = phi_series([a * a, b * b, c * c], [a * a * b * b * q, 0], 2, q * q, N, q)
    else:
        lhs = phi_series([a * a, b * b, c, d], [ab_sqrt_q, -ab_sqrt_q, -c * d], 1, q, 2 * N, q)
        rhs = phi_series([a * a, b * b, c * c, d * d], [a * a * b * b * q, -c * d, -c * d * q],
                         2, q * q, N, q)
    return lhs, rhs


def _generic(upper: Sequence, lower: Sequence, qb: Fraction, top: int) -> bool:
    """No parameter but the terminating one cuts the sum short, and no
    denominator factor vanishes before the natural end ``top``."""
    return all(1 - x * qb ** k for x in upper for k in range(top)) and \
        all(1 - y * qb ** k for y in lower for k in range(top))


def _rational(rng: random.Random, lo: int = 1, hi: int = 9) -> Fraction:
    while True:
        x = Fraction(rng.randint(-hi, hi), rng.randint(lo, hi))
        if x not in (0, 1, -1):
            return x


def _random_check(name: str, N: int | None, samples: int, seed: int) -> tuple[str | None, int]:
    rng = random.Random(seed)
    count = 0
    tries = 0
    while count < samples:
        tries += 1
        if tries > 50 * samples:
            raise RuntimeError(f"{name}: too many degenerate samples")
        n_ = N if N is not None else rng.randint(1, 4)
        p, b, c = _rational(rng), _rational(rng), _rational(rng)
        d = None if name == "s-2" else _rational(rng)
        try:
            lhs, rhs = singh_sides(n_, p, b, c, d)
        except (DegenerateDenominator, ZeroDivisionError):
            continue
        count += 1
        if lhs != rhs:
            where = f"N={n_},p={p},b={b},c={c}" + ("" if d is None else f",d={d}")
            return f"at {where}: {lhs - rhs}", count
    return None, count


def verify_identity(name: str, samples: int = 200, seed: int = 0, timings: bool = False,
                    **params) -> VerificationReport:
    """Exact check of one identity; ``params`` are ``n`` (grid ones), ``N``
    (optional for the random ones) or ``d, n`` (closed forms)."""
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}")
    t0 = time.perf_counter()
    if name in CLOSED_FORMS:
        from .engine import verify
        return verify(builtins.builtin(name, **params), "Auto", timings)
    if name in GRID_IDENTITIES:
        if set(params) != {"n"}:
            raise TypeError(f"{name} takes exactly the parameter n")
        n = params["n"]
        if n < 0:
            raise ValueError("n must be >= 0")
        if name == "ss-0-0":
            residue, count = _grid_check(name, n, n + 1, 2, chu_vandermonde_sides)
        else:
            residue, count = _grid_check(name, n, 2 * n + 1, 3, saalschuetz_sides)
        strategy, detail = "Grid", f"points={count}"
    else:
        if set(params) - {"N"}:
            raise TypeError(f"{name} takes only the optional parameter N")
        N = params.get("N")
        if N is not None and N < 0:
            raise ValueError("N must be >= 0")
        residue, count = _random_check(name, N, samples, seed)
        strategy, detail = "Random", f"points={count}; seed={seed}"
    outcome = Outcome.FAIL if residue else Outcome.PASS
    millis = round((time.perf_counter() - t0) * 1000, 3) if timings else None
    return VerificationReport(name, tuple(sorted(params.items())), strategy, outcome,
                              residue, millis, detail)


def identity_suite(grid_n: Iterable[tuple[str, int]] = (), samples: int = 200,
                   seed: int = 0) -> list[VerificationReport]:
    """Grid identities for the given ``(name, n)`` pairs, then both Singh checks."""
    out = [verify_identity(name, n=n) for name, n in grid_n]
    out += [verify_identity(name, samples=samples, seed=seed) for name in RANDOM_IDENTITIES]
    return out
