"""The quotient ring Q[q]/M(q) with M monic, typically a cyclotomic power.

Cyclotomic power rings get two shortcuts that the generic path lacks:

* reduction first folds modulo the sparse multiple ``(q^n - 1)^m`` and only
  then divides by ``Phi_n^m``, so multiplying by a power of ``q`` is cheap;
* inversion works in ``Q[q]/Phi_n`` (a field) through the product of the
  Galois conjugates ``a(q^j)``, then lifts to ``Phi_n^m`` by Newton steps.

Explicit moduli fall back to the extended Euclidean algorithm.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .polycore import (
    LaurentPoly,
    Poly,
    cyclotomic,
    int_mul,
    int_reduce,
    poly_ext_gcd,
    sparse_tail,
)


class RingMismatch(TypeError):
    """Elements of different quotient rings were combined."""


class NonInvertible(ArithmeticError):
    """An element shares a factor with the modulus.

    ``gcd`` carries the common factor, ``element`` the offending residue and
    ``context`` a free-form note (for example the summation index).
    """

    def __init__(self, message: str, gcd: Poly | None = None, element=None, context: str = ""):
        super().__init__(message)
        self.gcd = gcd
        self.element = element
        self.context = context


class NonInvertibleShift(NonInvertible):
    """A negative power of ``q`` was requested but ``q`` is not a unit."""


@dataclass(frozen=True)
class CyclotomicPower:
    n: int
    m: int

    def __str__(self) -> str:
        return f"Phi_{self.n}^{self.m}"


@dataclass(frozen=True)
class ExplicitPoly:
    text: str

    def __str__(self) -> str:
        return f"({self.text})"


class ModulusRing:
    """``Q[q]/modulus`` for a monic modulus of degree at least one."""

    def __init__(self, modulus: Poly, descriptor=None):
        if not modulus or modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus.lead() != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.descriptor = descriptor if descriptor is not None else ExplicitPoly(str(modulus))
        self.dim = len(modulus.num) - 1
        self._integral = modulus.den == 1
        self._tail = sparse_tail(modulus.num) if self._integral else None
        self._fold = None
        self._period = None
        if isinstance(self.descriptor, CyclotomicPower):
            n, m = self.descriptor.n, self.descriptor.m
            w = (Poly.from_int([-1] + [0] * (n - 1) + [1])) ** m
            self._fold = (len(w.num) - 1, sparse_tail(w.num))
            if m == 1:
                self._period = n
        self._qpow: dict[int, RingElem] = {}
        self._binom: dict[tuple[Fraction, int], RingElem] = {}
        self._local: dict[tuple[Fraction, int], tuple[int, RingElem]] = {}
        self._lock = threading.Lock()

    def __eq__(self, other) -> bool:
        return isinstance(other, ModulusRing) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"ModulusRing({self.descriptor})"

    # -- construction of elements

    def _reduce_int(self, c: list[int]) -> list[int]:
        if self._fold is not None and len(c) > self._fold[0]:
            int_reduce(c, self._fold[0], self._fold[1])
        if len(c) > self.dim:
            int_reduce(c, self.dim, self._tail)
        return c

    def _make(self, num: list[int], den: int) -> RingElem:
        n = len(num)
        while n and not num[n - 1]:
            n -= 1
        if n == 0:
            return RingElem(self, (), 1)
        del num[n:]
        if den == 1:
            return RingElem(self, tuple(num), 1)
        g = math.gcd(den, *num)
        if g != 1:
            num = [x // g for x in num]
            den //= g
        if den < 0:
            num = [-x for x in num]
            den = -den
        return RingElem(self, tuple(num), den)

    def _elem_from_poly(self, f: Poly) -> RingElem:
        if self._integral:
            return self._make(self._reduce_int(list(f.num)), f.den)
        return self._make_from_fraction_poly(f % self.modulus)

    def _make_from_fraction_poly(self, f: Poly) -> RingElem:
        return self._make(list(f.num), f.den)

    def reduce(self, f) -> RingElem:
        """Residue of a Poly, LaurentPoly or rational constant."""
        if isinstance(f, RingElem):
            self._check(f)
            return f
        if isinstance(f, (int, Fraction)):
            c = Fraction(f)
            return self._make([c.numerator], c.denominator)
        if isinstance(f, Poly):
            return self._elem_from_poly(f)
        if isinstance(f, LaurentPoly):
            if not f:
                return self.zero
            body = self._elem_from_poly(f.body)
            if f.shift >= 0:
                return body.mul_qpow(f.shift)
            return body * self.qpow(f.shift)
        raise TypeError(f"cannot reduce {type(f).__name__}")

    def _check(self, e: RingElem) -> None:
        if e.ring is not self and e.ring != self:
            raise RingMismatch(f"element of {e.ring!r} used in {self!r}")

    @cached_property
    def zero(self) -> RingElem:
        return RingElem(self, (), 1)

    @cached_property
    def one(self) -> RingElem:
        return self._make([1], 1)

    @cached_property
    def q(self) -> RingElem:
        return self.reduce(Poly.from_int([0, 1]))

    @cached_property
    def base(self) -> ModulusRing:
        """``Phi_n`` ring under a ``Phi_n^m`` ring (itself otherwise)."""
        d = self.descriptor
        if isinstance(d, CyclotomicPower) and d.m != 1:
            return cyclotomic_ring(d.n, 1)
        return self

    def constant(self, c) -> RingElem:
        return self.reduce(Fraction(c))

    def qpow(self, e: int) -> RingElem:
        """``q**e`` for any integer ``e`` (negative needs ``q`` to be a unit)."""
        hit = self._qpow.get(e)
        if hit is not None:
            return hit
        if e >= 0:
            val = self.one.mul_qpow(e)
        else:
            if self._period is not None:
                val = self.qpow(e % self._period)
            else:
                try:
                    qinv = self.qpow(-1) if e != -1 else invert(self.q)
                except NonInvertible as exc:
                    raise NonInvertibleShift("q is not a unit modulo the modulus", exc.gcd) from None
                val = qinv if e == -1 else self.qpow(-1) ** (-e)
        with self._lock:
            self._qpow.setdefault(e, val)
        return self._qpow[e]

    def binomial(self, c, e: int) -> RingElem:
        """Residue of ``1 - c*q**e``."""
        c = Fraction(c)
        key = (c, e)
        hit = self._binom.get(key)
        if hit is None:
            hit = self.one - self.qpow(e).scale(c)
            self._binom[key] = hit
        return hit

    # -- local (Phi_n-adic) splitting

    @property
    def phi_power(self) -> int | None:
        d = self.descriptor
        return d.m if isinstance(d, CyclotomicPower) else None

    def split_binomial(self, c, e: int) -> tuple[int, RingElem]:
        """Write ``1 - c*q**e = Phi_n**v * u`` with ``u`` prime to ``Phi_n``.

        Returns ``(v, residue of u)``.  On non-cyclotomic moduli ``v`` is 0 and
        no splitting is attempted.
        """
        c = Fraction(c)
        key = (c, e)
        hit = self._local.get(key)
        if hit is not None:
            return hit
        d = self.descriptor
        if isinstance(d, CyclotomicPower) and d.n > 1 and not _may_vanish(c, e, d.n):
            return 0, None
        elem = self.binomial(c, e)
        if not isinstance(d, CyclotomicPower) or is_unit(elem):
            out = (0, elem)
        else:
            f = LaurentPoly.monomial(0, 1) - LaurentPoly.monomial(e, c)
            if not f:
                raise NonInvertible(f"factor 1 - ({c})*q^{e} is identically zero", element=elem)
            v, unit = split_phi(f, d.n)
            out = (v, self.reduce(unit))
        self._local[key] = out
        return out

    def phi_elem(self) -> RingElem:
        d = self.descriptor
        if not isinstance(d, CyclotomicPower):
            raise TypeError("phi_elem needs a cyclotomic power ring")
        return self.reduce(cyclotomic(d.n))

    def local_value(self, v: int, unit: RingElem) -> RingElem:
        """``Phi_n**v * unit`` for ``v >= 0`` (zero once ``v >= m``)."""
        if v < 0:
            raise NonInvertible("negative Phi_n-adic valuation", element=unit)
        if v == 0:
            return unit
        m = self.phi_power
        if m is not None and v >= m:
            return self.zero
        return unit * self.phi_elem() ** v


def _may_vanish(c: Fraction, e: int, n: int) -> bool:
    """Could ``1 - c*zeta**e`` vanish for a primitive ``n``-th root ``zeta``?

    Only when ``|c| == 1``: ``c = 1`` needs ``n | e``, ``c = -1`` needs
    ``zeta**e = -1``, i.e. ``n | 2e`` but ``n`` does not divide ``e``.
    """
    if c == 1:
        return e % n == 0
    if c == -1:
        return (2 * e) % n == 0 and e % n != 0
    return False


def split_phi(f: LaurentPoly, n: int) -> tuple[int, LaurentPoly]:
    """Largest ``v`` with ``Phi_n**v | f`` and the cofactor ``f / Phi_n**v``."""
    phi = cyclotomic(n)
    body, v = f.body, 0
    while True:
        quo, rem = body.divrem(phi)
        if rem:
            break
        body, v = quo, v + 1
    return v, LaurentPoly(body, f.shift)


class RingElem:
    """Immutable residue ``num/den`` in a :class:`ModulusRing`."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: ModulusRing, num: tuple[int, ...], den: int):
        self.ring = ring
        self.num = num
        self.den = den

    @property
    def residue(self) -> Poly:
        return Poly.from_int(self.num, self.den)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElem):
            self.ring._check(other)
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RingElem({self.residue} mod {self.ring.descriptor})"

    def __str__(self) -> str:
        return str(self.residue)

    def _coerce(self, other) -> RingElem:
        if isinstance(other, RingElem):
            self.ring._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b = self, other
        if a.den == b.den:
            da = db = 1
            den = a.den
        else:
            g = math.gcd(a.den, b.den)
            da, db = b.den // g, a.den // g
            den = a.den * da
        n = max(len(a.num), len(b.num))
        out = [0] * n
        for i, x in enumerate(a.num):
            out[i] = x * da
        for i, x in enumerate(b.num):
            out[i] += x * db
        return self.ring._make(out, den)

    __radd__ = __add__

    def __neg__(self) -> RingElem:
        return RingElem(self.ring, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return self.ring.zero
        prod = int_mul(self.num, other.num)
        return self.ring._make(self.ring._reduce_int(prod), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RingElem:
        if e < 0:
            return invert(self) ** (-e)
        out, base = self.ring.one, self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * invert(other)

    def scale(self, c) -> RingElem:
        c = Fraction(c)
        if not c or not self.num:
            return self.ring.zero
        return self.ring._make([x * c.numerator for x in self.num], self.den * c.denominator)

    def axpy(self, c, e: int, v: RingElem) -> RingElem:
        """``self + c * q**e * v``."""
        return self + v.mul_qpow(e).scale(c)

    def mul_qpow(self, e: int) -> RingElem:
        """Multiply by ``q**e``; cheap for ``e >= 0`` thanks to folding."""
        if not self.num or e == 0:
            return self
        if e < 0:
            if self.ring._period is not None:
                e %= self.ring._period
                if e == 0:
                    return self
            else:
                return self * self.ring.qpow(e)
        c = [0] * e + list(self.num)
        return self.ring._make(self.ring._reduce_int(c), self.den)

    def mul_binomial(self, c, e: int) -> RingElem:
        """``self * (1 - c*q**e)``, fused into one normalization."""
        c = Fraction(c)
        if not c or not self.num:
            return self
        ring = self.ring
        if e < 0:
            if ring._period is None:
                return self - self.mul_qpow(e).scale(c)
            e %= ring._period
        sh = [0] * e + list(self.num)
        ring._reduce_int(sh)
        cn, cd = c.numerator, c.denominator
        a = self.num
        if len(sh) < len(a):
            sh.extend([0] * (len(a) - len(sh)))
        if cd == 1:
            out = [-cn * x for x in sh]
            for i, x in enumerate(a):
                out[i] += x
            return ring._make(out, self.den)
        out = [x * cd for x in a] + [0] * (len(sh) - len(a))
        for i, x in enumerate(sh):
            out[i] -= cn * x
        return ring._make(out, self.den * cd)


# -- ring constructors --------------------------------------------------------

_RINGS: dict[tuple[int, int], ModulusRing] = {}
_RINGS_LOCK = threading.Lock()


def cyclotomic_ring(n: int, m: int = 1) -> ModulusRing:
    """Memoized ``Q[q]/Phi_n(q)^m``."""
    key = (n, m)
    hit = _RINGS.get(key)
    if hit is None:
        ring = ModulusRing(cyclotomic(n) ** m, CyclotomicPower(n, m))
        with _RINGS_LOCK:
            hit = _RINGS.setdefault(key, ring)
    return hit


def explicit_ring(modulus: Poly) -> ModulusRing:
    return ModulusRing(modulus, ExplicitPoly(str(modulus)))


def reduce(ring: ModulusRing, f) -> RingElem:
    return ring.reduce(f)


# -- units and inverses -------------------------------------------------------

def _units_mod(n: int) -> list[int]:
    return [j for j in range(2, n) if math.gcd(j, n) == 1]


def _conjugate(ring: ModulusRing, e: RingElem, j: int) -> RingElem:
    """``e(q^j)`` in the prime-level ring ``Q[q]/Phi_n``."""
    n = ring.descriptor.n
    out = [0] * n
    for i, x in enumerate(e.num):
        out[(i * j) % n] += x
    return ring._make(ring._reduce_int(out), e.den)


def is_unit(e: RingElem) -> bool:
    """True iff ``gcd(residue, modulus) == 1``.

    For ``Phi_n^m`` this is equivalent to the residue being nonzero modulo the
    irreducible ``Phi_n``, which is what gets tested.
    """
    ring = e.ring
    if isinstance(ring.descriptor, CyclotomicPower):
        base = ring.base
        return bool(e.num) and bool(base._make(base._reduce_int(list(e.num)), e.den))
    if not e.num:
        return False
    g, _, _ = poly_ext_gcd(e.residue, ring.modulus)
    return g.degree == 0


def _invert_field(e: RingElem) -> RingElem:
    ring = e.ring
    acc = ring.one
    for j in _units_mod(ring.descriptor.n):
        acc = acc * _conjugate(ring, e, j)
    norm = e * acc
    if len(norm.num) != 1:
        raise AssertionError("Galois norm is not a rational constant")
    return acc.scale(Fraction(norm.den, norm.num[0]))


def invert(e: RingElem, method: str = "auto") -> RingElem:
    """Inverse of a unit; raises :class:`NonInvertible` on zero divisors.

    Over ``Phi_n^m`` the default inverts modulo ``Phi_n`` through the product
    of Galois conjugates (the norm is rational) and lifts by Newton steps.
    ``method="euclid"`` uses the extended Euclidean algorithm against the
    modulus instead, which is what every other ring uses; both are exact and
    agree, Euclid is much slower for large ``n`` because of coefficient growth.
    """
    if method not in ("auto", "euclid"):
        raise ValueError(f"unknown inversion method {method!r}")
    if isinstance(e, LaurentElem):
        # the units of Q[q, 1/q] are the monomials c*q^e
        body = e.value.body
        if len(body.num) != 1:
            raise NonInvertible(f"{e} is not a unit of Q[q, 1/q]", element=e)
        return LaurentElem(e.ring, LaurentPoly.monomial(-e.value.shift, 1 / body.lead()))
    ring = e.ring
    if isinstance(ring.descriptor, CyclotomicPower) and method == "auto":
        base = ring.base
        low = base._make(base._reduce_int(list(e.num)), e.den) if base is not ring else e
        if not low:
            raise NonInvertible(
                f"{e.residue} is divisible by Phi_{ring.descriptor.n}",
                gcd=cyclotomic(ring.descriptor.n), element=e)
        b = _invert_field(low)
        if base is ring:
            return b
        b = ring._make(list(b.num), b.den)
        prec, two = 1, ring.constant(2)
        while prec < ring.descriptor.m:
            b = b * (two - e * b)
            prec *= 2
        return b
    if not e.num:
        raise NonInvertible("zero is not invertible", gcd=ring.modulus, element=e)
    g, u, _ = poly_ext_gcd(e.residue, ring.modulus)
    if g.degree != 0:
        raise NonInvertible(f"gcd with modulus is {g}", gcd=g, element=e)
    return ring.reduce(u)


# -- the trivial quotient: exact Laurent polynomials in q ----------------------

@dataclass(frozen=True)
class Exact:
    """Descriptor for exact equality in Q[q, 1/q] (no modulus)."""

    def __str__(self) -> str:
        return "exact"


class LaurentRing:
    """Coefficient ring ``Q[q, 1/q]`` offering the RingElem interface.

    MPoly works over it unchanged, which gives exact polynomial identities in
    the symbolic variables with Laurent coefficients.
    """

    descriptor = Exact()
    phi_power = None

    def __repr__(self) -> str:
        return "LaurentRing()"

    @cached_property
    def zero(self) -> LaurentElem:
        return LaurentElem(self, LaurentPoly())

    @cached_property
    def one(self) -> LaurentElem:
        return LaurentElem(self, LaurentPoly.monomial(0))

    def reduce(self, f) -> LaurentElem:
        if isinstance(f, LaurentElem):
            return f
        return LaurentElem(self, LaurentPoly.of(f))

    def constant(self, c) -> LaurentElem:
        return self.reduce(Fraction(c))

    def qpow(self, e: int) -> LaurentElem:
        return LaurentElem(self, LaurentPoly.monomial(e))

    def binomial(self, c, e: int) -> LaurentElem:
        return self.one.mul_binomial(c, e)

    def split_binomial(self, c, e: int):
        """No prime to split off: every nonzero ``1 - c*q**e`` is regular here."""
        if Fraction(c) == 1 and e == 0:
            raise NonInvertible("factor 1 - q^0 is identically zero")
        return 0, None

    def _check(self, e) -> None:
        if not isinstance(e, LaurentElem):
            raise RingMismatch(f"{type(e).__name__} used in {self!r}")


class LaurentElem:
    __slots__ = ("ring", "value")

    def __init__(self, ring: LaurentRing, value: LaurentPoly):
        self.ring = ring
        self.value = value

    @property
    def residue(self) -> LaurentPoly:
        return self.value

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def is_one(self) -> bool:
        return self.value.shift == 0 and self.value.body.num == (1,) and self.value.body.den == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentElem):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == LaurentPoly.of(Fraction(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        v = self.value
        if not v or v.shift == 0:
            return str(v.body)
        return f"q^{v.shift}*({v.body})"

    def __repr__(self) -> str:
        return f"LaurentElem({self})"

    def _coerce(self, other):
        if isinstance(other, LaurentElem):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentElem(self.ring, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElem(self.ring, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentElem(self.ring, self.value - other.value)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentElem(self.ring, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power in LaurentRing")
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c):
        c = Fraction(c)
        return LaurentElem(self.ring, LaurentPoly(self.value.body.scale(c), self.value.shift))

    def axpy(self, c, e: int, v):
        return self + v.mul_qpow(e).scale(c)

    def mul_qpow(self, e: int):
        v = self.value
        if not v:
            return self
        return LaurentElem(self.ring, LaurentPoly(v.body, v.shift + e))

    def mul_binomial(self, c, e: int):
        return LaurentElem(self.ring, self.value.mul_binomial(c, e))


LAURENT = LaurentRing()


# -- lazy arithmetic modulo q^n - 1 ----------------------------------------------

class PeriodicView:
    """Arithmetic of ``Z[q]/(q^n - 1)`` (with a denominator) standing in for ``Q[q]/Phi_n``.

    Since ``Phi_n`` divides ``q^n - 1``, computing modulo ``q^n - 1`` and
    reducing once at the end gives the same element; multiplying by ``q^e``
    is a rotation, so long Horner chains avoid the costly reduction by a
    dense cyclotomic polynomial.
    """

    def __init__(self, ring: ModulusRing):
        if ring._period is None:
            raise ValueError("PeriodicView needs a Phi_n (first power) ring")
        self.base_ring = ring
        self.n = ring._period
        self.descriptor = ring.descriptor
        self.phi_power = ring.phi_power
        self.one = Periodic(self, [1] + [0] * (self.n - 1), 1)
        self.zero = Periodic(self, [0] * self.n, 1)

    def lift(self, e: RingElem) -> Periodic:
        v = list(e.num) + [0] * (self.n - len(e.num))
        return Periodic(self, v, e.den)

    def project(self, e: Periodic) -> RingElem:
        r = self.base_ring
        return r._make(r._reduce_int(list(e.vec)), e.den)

    def split_binomial(self, c, e: int):
        if type(c) is int and (c > 1 or c < -1):
            return 0, None
        v, u = self.base_ring.split_binomial(c, e)
        return v, (self.lift(u) if v else None)

    def phi_elem(self) -> Periodic:
        return self.lift(self.base_ring.phi_elem())

    def qpow(self, e: int) -> Periodic:
        return self.one.mul_qpow(e)

    def _check(self, e) -> None:
        if not isinstance(e, Periodic) or e.view is not self:
            raise RingMismatch("element of another ring used in a periodic view")


class Periodic:
    __slots__ = ("view", "vec", "den")

    def __init__(self, view: PeriodicView, vec: list, den: int):
        self.view = view
        self.vec = vec
        self.den = den

    def __bool__(self) -> bool:
        return any(self.vec)

    def is_one(self) -> bool:
        return self.den == 1 and self.vec[0] == 1 and not any(self.vec[1:])

    def _rot(self, e: int) -> list:
        r = e % self.view.n
        v = self.vec
        return v[-r:] + v[:-r] if r else v

    def mul_qpow(self, e: int) -> Periodic:
        return Periodic(self.view, self._rot(e), self.den)

    def __neg__(self) -> Periodic:
        return Periodic(self.view, [-x for x in self.vec], self.den)

    def __sub__(self, other: Periodic) -> Periodic:
        return self + (-other)

    def axpy(self, c, e: int, v: Periodic) -> Periodic:
        """``self + c * q**e * v``, fused when everything is integral."""
        if self.den == 1 and v.den == 1 and (type(c) is int or c.denominator == 1):
            c = int(c)
            return Periodic(self.view, [a + c * b for a, b in zip(self.vec, v._rot(e))], 1)
        return self + v.mul_qpow(e).scale(c)

    def scale(self, c) -> Periodic:
        if type(c) is int:
            if c == 1:
                return self
            return Periodic(self.view, [c * x for x in self.vec], self.den)
        c = Fraction(c)
        p, r = c.numerator, c.denominator
        return Periodic(self.view, [p * x for x in self.vec], self.den * r)

    def mul_binomial(self, c, e: int) -> Periodic:
        """``self * (1 - c*q**e)``."""
        if isinstance(c, int) or c.denominator == 1:
            p = int(c)
            return Periodic(self.view, [a - p * b for a, b in zip(self.vec, self._rot(e))], self.den)
        p, r = c.numerator, c.denominator
        return Periodic(self.view, [r * a - p * b for a, b in zip(self.vec, self._rot(e))],
                        self.den * r)

    def __add__(self, other: Periodic) -> Periodic:
        if self.den == other.den:
            return Periodic(self.view, [a + b for a, b in zip(self.vec, other.vec)], self.den)
        g = math.gcd(self.den, other.den)
        fa, fb = other.den // g, self.den // g
        vec = [a * fa + b * fb for a, b in zip(self.vec, other.vec)]
        den = self.den * fa
        g = math.gcd(den, *vec)
        if g > 1:
            vec = [x // g for x in vec]
            den //= g
        return Periodic(self.view, vec, den)

    def __mul__(self, other: Periodic) -> Periodic:
        n = self.view.n
        out = [0] * n
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(other.vec):
                    if b:
                        out[(i + j) % n] += a * b
        return Periodic(self.view, out, self.den * other.den)

    def __pow__(self, k: int) -> Periodic:
        out = self.view.one
        for _ in range(k):
            out = out * self
        return out
