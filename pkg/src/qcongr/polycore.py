"""Exact dense univariate polynomials over the rationals.

A :class:`Poly` stores an integer coefficient vector together with a single
positive denominator, so ``Poly([1, Fraction(1, 2)])`` is held as
``((2, 1), 2)``.  The pair is kept primitive (the gcd of the numerators and
the denominator is one) and trailing zeros are stripped, which makes equality
a structural comparison.

Products of long vectors go through Kronecker substitution: both integer
vectors are packed into one big integer each, multiplied once in C, and the
result is unpacked with balanced digits.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

NEG_INF = float("-inf")

_KRONECKER_MIN = 12


# -- integer vector kernels -------------------------------------------------

def _strip(c: list[int]) -> list[int]:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


def _pack(c: Sequence[int], nbytes: int) -> int:
    pos = b"".join((x if x > 0 else 0).to_bytes(nbytes, "little") for x in c)
    neg = b"".join((-x if x < 0 else 0).to_bytes(nbytes, "little") for x in c)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(v: int, nbytes: int, n: int) -> list[int]:
    sign = 1
    if v < 0:
        v, sign = -v, -1
    raw = v.to_bytes(nbytes * n + 1, "little")
    full = 1 << (8 * nbytes)
    half = full >> 1
    out = [0] * n
    carry = 0
    frm = int.from_bytes
    for i in range(n):
        x = frm(raw[i * nbytes:(i + 1) * nbytes], "little") + carry
        if x >= half:
            x -= full
            carry = 1
        else:
            carry = 0
        out[i] = x if sign > 0 else -x
    return out


def int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two integer coefficient vectors (no stripping)."""
    if not a or not b:
        return []
    la, lb = len(a), len(b)
    if la < _KRONECKER_MIN or lb < _KRONECKER_MIN:
        out = [0] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    ba = max(a, key=abs)
    bb = max(b, key=abs)
    if not ba or not bb:
        return [0] * (la + lb - 1)
    bits = abs(ba).bit_length() + abs(bb).bit_length() + min(la, lb).bit_length() + 2
    nbytes = (bits + 7) // 8
    return _unpack(_pack(a, nbytes) * _pack(b, nbytes), nbytes, la + lb - 1)


def sparse_tail(mod: Sequence[int]) -> list[tuple[int, int]]:
    """Nonzero ``(index, coeff)`` pairs of a monic vector below its leading term."""
    return [(i, x) for i, x in enumerate(mod[:-1]) if x]


def int_reduce(c: list[int], d: int, tail: Sequence[tuple[int, int]]) -> list[int]:
    """Remainder of ``c`` modulo the monic integer polynomial ``q^d + tail`` (in place)."""
    for top in range(len(c) - 1, d - 1, -1):
        t = c[top]
        if t:
            base = top - d
            for i, x in tail:
                c[base + i] -= t * x
    del c[d:]
    return c


# -- Poly -------------------------------------------------------------------

class Poly:
    """Immutable polynomial in ``q`` with rational coefficients.

    Coefficient ``i`` multiplies ``q**i``.  Build from any iterable of ints or
    Fractions; use :meth:`from_int` on the hot path when the integer vector
    and denominator are already known.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        den = 1
        for c in cs:
            if c.denominator != 1:
                den = den * c.denominator // math.gcd(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in cs]
        self._set(num, den)

    def _set(self, num: list[int], den: int) -> None:
        _strip(num)
        if not num:
            den = 1
        else:
            g = math.gcd(den, *num)
            if g != 1:
                num = [x // g for x in num]
                den //= g
        self.num = tuple(num)
        self.den = den
        self._hash = None

    @classmethod
    def from_int(cls, num: Sequence[int], den: int = 1) -> Poly:
        p = cls.__new__(cls)
        if den < 0:
            num = [-x for x in num]
            den = -den
        p._set(list(num), den)
        return p

    @classmethod
    def monomial(cls, e: int, c=1) -> Poly:
        if e < 0:
            raise ValueError("negative exponent in Poly.monomial")
        c = Fraction(c)
        return cls.from_int([0] * e + [c.numerator], c.denominator)

    @classmethod
    def constant(cls, c) -> Poly:
        c = Fraction(c)
        return cls.from_int([c.numerator], c.denominator)

    # -- inspection

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    @property
    def degree(self):
        return len(self.num) - 1 if self.num else NEG_INF

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __len__(self) -> int:
        return len(self.num)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.num):
            return Fraction(self.num[i], self.den)
        return Fraction(0)

    def lead(self) -> Fraction:
        return Fraction(self.num[-1], self.den) if self.num else Fraction(0)

    def is_constant(self) -> bool:
        return len(self.num) <= 1

    def low_order(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
        for i, x in enumerate(self.num):
            if x:
                return i
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.num:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("q" if i == 1 else f"q^{i}")
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    # -- arithmetic

    @staticmethod
    def _coerce(x) -> Poly:
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.constant(x)
        return NotImplemented

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.den == b.den:
            da, db, den = 1, 1, a.den
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
        return Poly.from_int(out, den)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        p = Poly.__new__(Poly)
        p.num = tuple(-x for x in self.num)
        p.den = self.den
        p._hash = None
        return p

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly.from_int(int_mul(self.num, other.num), self.den * other.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.constant(1), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def scale(self, c) -> Poly:
        c = Fraction(c)
        return Poly.from_int([x * c.numerator for x in self.num], self.den * c.denominator)

    def shift(self, e: int) -> Poly:
        """Multiply by ``q**e`` (``e >= 0``)."""
        if e < 0:
            raise ValueError("negative shift")
        if not self.num or e == 0:
            return self
        p = Poly.__new__(Poly)
        p.num = (0,) * e + self.num
        p.den = self.den
        p._hash = None
        return p

    def mul_binomial(self, c, e: int) -> Poly:
        """Return ``self * (1 - c*q**e)`` in linear time (``e >= 0``)."""
        c = Fraction(c)
        a, b = c.denominator, c.numerator
        out = [x * a for x in self.num] + [0] * e
        for i, x in enumerate(self.num):
            out[i + e] -= b * x
        return Poly.from_int(out, self.den * a)

    def divrem(self, g: Poly) -> tuple[Poly, Poly]:
        """Quotient and remainder with ``deg(rem) < deg(g)``."""
        if not g.num:
            raise ZeroDivisionError("polynomial division by zero")
        dg = len(g.num) - 1
        if len(self.num) <= dg:
            return Poly(), self
        lg = g.num[-1]
        if g.den == 1 and lg == 1:
            r = list(self.num)
            q = [0] * (len(r) - dg)
            tail = sparse_tail(g.num)
            for top in range(len(r) - 1, dg - 1, -1):
                t = r[top]
                if t:
                    q[top - dg] = t
                    base = top - dg
                    for i, x in tail:
                        r[base + i] -= t * x
            return Poly.from_int(q, self.den), Poly.from_int(r[:dg], self.den)
        r = [Fraction(x, self.den) for x in self.num]
        gc = [Fraction(x, g.den) for x in g.num]
        lc = Fraction(lg, g.den)
        q = [Fraction(0)] * (len(r) - dg)
        for top in range(len(r) - 1, dg - 1, -1):
            t = r[top]
            if t:
                f = t / lc
                q[top - dg] = f
                base = top - dg
                for i, x in enumerate(gc):
                    if x:
                        r[base + i] -= f * x
        return Poly(q), Poly(r[:dg])

    def __divmod__(self, g):
        return self.divrem(Poly._coerce(g))

    def __floordiv__(self, g):
        return self.divrem(Poly._coerce(g))[0]

    def __mod__(self, g):
        return self.divrem(Poly._coerce(g))[1]

    def exact_div(self, g: Poly) -> Poly:
        quo, rem = self.divrem(g)
        if rem:
            raise ArithmeticError(f"{g} does not divide {self}")
        return quo

    def monic(self) -> Poly:
        if not self.num:
            return self
        return self.scale(Fraction(self.den, self.num[-1]))

    def is_monic_integral(self) -> bool:
        return bool(self.num) and self.den == 1 and self.num[-1] == 1


def poly_ext_gcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Monic ``gcd`` with cofactors ``u, v`` such that ``u*f + v*g == gcd``."""
    if not f and not g:
        raise ValueError("gcd of two zero polynomials")
    r0, r1 = f, g
    s0, s1 = Poly.constant(1), Poly()
    t0, t1 = Poly(), Poly.constant(1)
    while r1:
        quo, rem = r0.divrem(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    lc = r0.lead()
    inv = 1 / lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def q_integer(n: int) -> Poly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 1:
        raise ValueError("q_integer needs n >= 1")
    return Poly.from_int([1] * n)


_CYCLO: dict[int, Poly] = {}
_CYCLO_LOCK = threading.Lock()


def cyclotomic(n: int) -> Poly:
    """The ``n``-th cyclotomic polynomial, by exact division of ``q^n - 1``."""
    if n < 1:
        raise ValueError("cyclotomic needs n >= 1")
    hit = _CYCLO.get(n)
    if hit is not None:
        return hit
    acc = Poly.constant(1)
    for d in range(1, n):
        if n % d == 0:
            acc = acc * cyclotomic(d)
    top = Poly.from_int([-1] + [0] * (n - 1) + [1])
    quo, rem = top.divrem(acc)
    assert not rem, f"cyclotomic({n}): nonzero remainder"
    with _CYCLO_LOCK:
        _CYCLO.setdefault(n, quo)
    return _CYCLO[n]


class LaurentPoly:
    """``q**shift * body`` with ``body(0) != 0`` (or the zero element)."""

    __slots__ = ("body", "shift")

    def __init__(self, body: Poly | None = None, shift: int = 0):
        body = body if body is not None else Poly()
        if not body:
            self.body, self.shift = body, 0
            return
        low = body.low_order()
        if low:
            body = Poly.from_int(body.num[low:], body.den)
        self.body, self.shift = body, shift + low

    @classmethod
    def monomial(cls, e: int, c=1) -> LaurentPoly:
        return cls(Poly.constant(c), e)

    @classmethod
    def of(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, Poly):
            return cls(x)
        return cls(Poly.constant(x))

    def is_zero(self) -> bool:
        return not self.body

    def __bool__(self) -> bool:
        return bool(self.body)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.of(other)
            except TypeError:
                return NotImplemented
        return self.shift == other.shift and self.body == other.body

    def __hash__(self) -> int:
        return hash((self.body, self.shift))

    def __repr__(self) -> str:
        if self.shift == 0:
            return f"LaurentPoly({self.body})"
        return f"LaurentPoly(q^{self.shift}*({self.body}))"

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(-self.body, self.shift)

    def __add__(self, other) -> LaurentPoly:
        other = LaurentPoly.of(other)
        if not self:
            return other
        if not other:
            return self
        s = min(self.shift, other.shift)
        return LaurentPoly(self.body.shift(self.shift - s) + other.body.shift(other.shift - s), s)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        return self + (-LaurentPoly.of(other))

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.of(other) - self

    def __mul__(self, other) -> LaurentPoly:
        return laurent_mul(self, LaurentPoly.of(other))

    __rmul__ = __mul__

    def mul_binomial(self, c, e: int) -> LaurentPoly:
        """Return ``self * (1 - c*q**e)`` for any integer ``e``."""
        if e >= 0:
            return LaurentPoly(self.body.mul_binomial(c, e), self.shift)
        # 1 - c q^e = q^e (q^-e - c) = -c q^e (1 - q^-e / c)
        c = Fraction(c)
        if not c:
            return self
        return LaurentPoly(self.body.mul_binomial(1 / c, -e).scale(-c), self.shift + e)

    def evaluate(self, x: Fraction) -> Fraction:
        return self.body(x) * Fraction(x) ** self.shift

    def to_poly(self) -> Poly:
        if self.shift < 0:
            raise ValueError("LaurentPoly has negative powers")
        return self.body.shift(self.shift)


def laurent_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Shifts add, bodies multiply; zero stays canonical."""
    if not f or not g:
        return LaurentPoly()
    return LaurentPoly(f.body * g.body, f.shift + g.shift)
