"""Classical (q -> 1) supercongruences checked modulo p^e.

Rationals are reduced modulo ``p**e`` by modular inversion; the p-adic Gamma
function is evaluated at the integer representative of its argument.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .claims.model import Outcome, VerificationReport

PRIME_LIMIT = 10**6


class NotPAdicInteger(ValueError):
    """A denominator is divisible by p."""


def is_prime(p: int) -> bool:
    """Deterministic trial division (ample for ``p < 10**6``)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not 2 <= p < PRIME_LIMIT or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime below {PRIME_LIMIT}")


@dataclass(frozen=True)
class ResidueInt:
    """An element of Z / p^e Z, stored reduced."""

    value: int
    p: int
    e: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.e < 1:
            raise ValueError("exponent must be >= 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p ** self.e

    @classmethod
    def of(cls, x, p: int, e: int) -> ResidueInt:
        """Reduce an integer or a p-integral rational."""
        x = Fraction(x)
        if x.denominator % p == 0:
            raise NotPAdicInteger(f"{x} is not a {p}-adic integer")
        m = p ** e
        return cls(x.numerator * pow(x.denominator, -1, m), p, e)

    def _other(self, other) -> int:
        if isinstance(other, ResidueInt):
            if (other.p, other.e) != (self.p, self.e):
                raise ValueError("residues modulo different prime powers")
            return other.value
        return ResidueInt.of(other, self.p, self.e).value

    def __add__(self, other) -> ResidueInt:
        return ResidueInt(self.value + self._other(other), self.p, self.e)

    __radd__ = __add__

    def __sub__(self, other) -> ResidueInt:
        return ResidueInt(self.value - self._other(other), self.p, self.e)

    def __rsub__(self, other) -> ResidueInt:
        return ResidueInt(self._other(other) - self.value, self.p, self.e)

    def __neg__(self) -> ResidueInt:
        return ResidueInt(-self.value, self.p, self.e)

    def __mul__(self, other) -> ResidueInt:
        return ResidueInt(self.value * self._other(other), self.p, self.e)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> ResidueInt:
        return ResidueInt(pow(self.value, k, self.modulus), self.p, self.e)

    def __eq__(self, other) -> bool:
        if isinstance(other, ResidueInt):
            return (self.value, self.p, self.e) == (other.value, other.p, other.e)
        try:
            return self.value == self._other(other)
        except NotPAdicInteger:
            return False

    def __hash__(self):
        return hash((self.value, self.p, self.e))

    def __str__(self) -> str:
        return f"{self.value} (mod {self.p}^{self.e})"


def rising_factorial_mod(a, k: int, p: int, e: int) -> ResidueInt:
    """``(a)_k = a (a+1) ... (a+k-1)`` modulo ``p**e``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    a = Fraction(a)
    out = ResidueInt(1, p, e)
    for j in range(k):
        out = out * ResidueInt.of(a + j, p, e)
    return out


@lru_cache(maxsize=None)
def _gamma_table(p: int, e: int) -> tuple:
    """``Gamma_p(j) mod p^e`` for ``0 <= j <= p^e``."""
    m = p ** e
    g = [1]
    for j in range(m):
        g.append((-j * g[-1] if j % p else -g[-1]) % m)
    return tuple(g)


def gamma_p(x, p: int, e: int) -> ResidueInt:
    """The p-adic Gamma function modulo ``p**e`` via the representative ``M = x mod p**e``."""
    _check_prime(p)
    M = ResidueInt.of(x, p, e).value
    return ResidueInt(_gamma_table(p, e)[M], p, e)


def _report(name: str, params: dict, outcome: Outcome, residue=None, detail=None, t0=None,
            timings=False) -> VerificationReport:
    millis = round((time.perf_counter() - t0) * 1000, 3) if timings and t0 is not None else None
    return VerificationReport(name, tuple(params.items()), "Modular", outcome, residue, millis, detail)


def _ratio_sum(a, b, power: int, top: int, p: int, e: int) -> ResidueInt:
    """``sum_{k<=top} ((a)_k / (b)_k)^power`` modulo ``p**e``, term by term."""
    total = ResidueInt(0, p, e)
    term = ResidueInt(1, p, e)
    a, b = Fraction(a), Fraction(b)
    for k in range(top + 1):
        total = total + term
        if k < top:
            term = term * ResidueInt.of(((a + k) / (b + k)) ** power, p, e)
    return total


def van_hamme_sum(p: int, top: int | None = None, e: int = 2) -> ResidueInt:
    """``sum_{k=0}^{top} (1/2)_k^3 / k!^3`` modulo ``p**e`` (default top ``(p-1)/2``)."""
    top = (p - 1) // 2 if top is None else top
    return _ratio_sum(Fraction(1, 2), 1, 3, top, p, e)


def van_hamme_sum_rational(p: int, top: int | None = None) -> Fraction:
    """Same sum as an exact rational (the independent path)."""
    top = (p - 1) // 2 if top is None else top
    total, term = Fraction(0), Fraction(1)
    for k in range(top + 1):
        total += term
        term *= (Fraction(1, 2) + k) ** 3 / Fraction(k + 1) ** 3
    return total


def verify_van_hamme(p: int, timings: bool = False, sign: int = 1) -> VerificationReport:
    """Half sum ``== sign * Gamma_p(1/4)^4`` (p = 1 mod 4) or ``0`` (p = 3 mod 4)
    mod p^2, and the same with the sum extended to ``p - 1``.

    ``sign=1`` is the statement as originally written (claim ``in-1``);
    ``sign=-1`` is the classical form (claim ``in-1-neg``).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    name = "in-1" if sign == 1 else "in-1-neg"
    t0 = time.perf_counter()
    params = {"p": p}
    if p == 2 or not is_prime(p):
        return _report(name, params, Outcome.HYPOTHESIS_FAIL, None, "requires an odd prime p",
                       t0, timings)
    if p % 4 == 1:
        rhs = gamma_p(Fraction(1, 4), p, 2) ** 4 * sign
        label = "Gamma_p(1/4)^4" if sign == 1 else "-Gamma_p(1/4)^4"
    else:
        rhs, label = ResidueInt(0, p, 2), "0"
    half = van_hamme_sum(p)
    full = van_hamme_sum(p, p - 1)
    bad = []
    if half != rhs:
        bad.append(f"sum to (p-1)/2 = {half.value}, expected {label} = {rhs.value} (mod {p}^2)")
    if full != rhs:
        bad.append(f"sum to p-1 = {full.value}, expected {label} = {rhs.value} (mod {p}^2)")
    if bad:
        return _report(name, params, Outcome.FAIL, "; ".join(bad), None, t0, timings)
    return _report(name, params, Outcome.PASS, None, f"branch p = {p % 4} (mod 4)", t0, timings)


def verify_quarter_corollary(p: int, timings: bool = False) -> VerificationReport:
    """``sum_{k=0}^{(p+1)/4} (-1/4)_k / k! == (-1)^((p-3)/4) p  (mod p^2)`` for p = 3 mod 4."""
    t0 = time.perf_counter()
    params = {"p": p}
    if not is_prime(p) or p % 4 != 3:
        return _report("quarter", params, Outcome.HYPOTHESIS_FAIL, None,
                       "requires a prime p = 3 (mod 4)", t0, timings)
    lhs = _ratio_sum(Fraction(-1, 4), 1, 1, (p + 1) // 4, p, 2)
    rhs = ResidueInt((-1) ** ((p - 3) // 4) * p, p, 2)
    if lhs != rhs:
        return _report("quarter", params, Outcome.FAIL,
                       f"lhs = {lhs.value}, rhs = {rhs.value} (mod {p}^2)", None, t0, timings)
    return _report("quarter", params, Outcome.PASS, None, None, t0, timings)


def verify_th3_limit(p: int, d: int, s: int, timings: bool = False) -> VerificationReport:
    """``sum_{k<p} (s/d)_k / k! == sum_{k<p} (s/(2d))_k / k!  (mod p)``."""
    t0 = time.perf_counter()
    params = {"p": p, "d": d, "s": s}
    if s not in (-1, 1) or d < 2:
        raise ValueError("need d >= 2 and s in {-1, 1}")
    if not is_prime(p) or (p - s) % (2 * d) or (2 * d) % p == 0:
        return _report("limit-3", params, Outcome.HYPOTHESIS_FAIL, None,
                       "requires a prime p = s (mod 2d), p coprime to 2d", t0, timings)
    lhs = _ratio_sum(Fraction(s, d), 1, 1, p - 1, p, 1)
    rhs = _ratio_sum(Fraction(s, 2 * d), 1, 1, p - 1, p, 1)
    if lhs != rhs:
        return _report("limit-3", params, Outcome.FAIL,
                       f"lhs = {lhs.value}, rhs = {rhs.value} (mod {p})", None, t0, timings)
    return _report("limit-3", params, Outcome.PASS, None, None, t0, timings)


def primes_below(n: int) -> list[int]:
    return [p for p in range(2, n) if is_prime(p)]


def limit_suite(van_hamme_max: int = 100, quarter_max: int = 200, th3_max: int = 150,
                ds=(2, 3, 4), timings: bool = False) -> list[VerificationReport]:
    """Every check of the p-adic suite over its admissible primes, in a fixed order."""
    out = [verify_van_hamme(p, timings) for p in primes_below(van_hamme_max) if p > 2]
    out += [verify_quarter_corollary(p, timings) for p in primes_below(quarter_max) if p % 4 == 3]
    for d in ds:
        for s in (-1, 1):
            out += [verify_th3_limit(p, d, s, timings) for p in primes_below(th3_max)
                    if (p - s) % (2 * d) == 0 and (2 * d) % p]
    return out
