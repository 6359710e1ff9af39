"""Sparse polynomials in x, y, a, m with coefficients in a quotient ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .quotient import ModulusRing, RingElem, RingMismatch, is_unit

VARIABLES = ("x", "y", "a", "m")
ONE = (0, 0, 0, 0)


def var_index(name: str) -> int:
    try:
        return VARIABLES.index(name)
    except ValueError:
        raise KeyError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


def mono(**exps: int) -> tuple[int, ...]:
    """Exponent vector from keyword exponents, e.g. ``mono(x=1, y=2)``."""
    out = [0, 0, 0, 0]
    for k, v in exps.items():
        out[var_index(k)] = v
    return tuple(out)


def mono_mul(a: tuple, b: tuple) -> tuple:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


def mono_str(e: tuple) -> str:
    parts = []
    for name, k in zip(VARIABLES, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


class MPoly:
    """Immutable map monomial -> nonzero RingElem over one owner ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ModulusRing, terms: Mapping[tuple, RingElem] | None = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    @classmethod
    def constant(cls, ring: ModulusRing, c) -> MPoly:
        if not isinstance(c, RingElem):
            c = ring.reduce(c)
        return cls(ring, {ONE: c})

    @classmethod
    def one(cls, ring: ModulusRing) -> MPoly:
        return cls._raw(ring, {ONE: ring.one})

    @classmethod
    def var(cls, ring: ModulusRing, name: str) -> MPoly:
        return cls._raw(ring, {mono(**{name: 1}): ring.one})

    def _same(self, other: MPoly) -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatch("MPoly operands live in different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(e == ONE for e in self.terms)

    def constant_term(self) -> RingElem:
        return self.terms.get(ONE, self.ring.zero)

    def degree(self, name: str) -> int:
        i = var_index(name)
        return max((e[i] for e in self.terms), default=0)

    def variables(self) -> set[str]:
        return {VARIABLES[i] for e in self.terms for i in range(4) if e[i]}

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            self._same(other)
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, RingElem)):
            return self == MPoly.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, MPoly):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction, RingElem)):
            return MPoly.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RingElem)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        out = MPoly.one(self.ring)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> MPoly:
        if not isinstance(c, (int, Fraction)):
            self.ring._check(c)
            if not c:
                return MPoly(self.ring)
            if c.is_one():
                return self
            return MPoly(self.ring, {e: v * c for e, v in self.terms.items()})
        c = Fraction(c)
        return MPoly(self.ring, {e: v.scale(c) for e, v in self.terms.items()})

    def mul_linear(self, c, qexp: int, m: tuple) -> MPoly:
        """``self * (1 - c * q**qexp * m)`` for a rational ``c`` and monomial ``m``."""
        c = Fraction(c)
        if not c:
            return self
        c = -c
        if c.denominator == 1:
            c = c.numerator
        zero = self.ring.zero
        out = dict(self.terms)
        for e, v in self.terms.items():
            e2 = mono_mul(e, m)
            s = out.get(e2, zero).axpy(c, qexp, v)
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return MPoly._raw(self.ring, out)

    def evaluate(self, assignment: Mapping[str, RingElem]) -> MPoly:
        """Substitute ring elements for some variables; others stay symbolic."""
        idx = {var_index(k): (v if isinstance(v, RingElem) else self.ring.reduce(v))
               for k, v in assignment.items()}
        for v in idx.values():
            self.ring._check(v)
        powers: dict[tuple[int, int], RingElem] = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = idx[i] ** k
            return powers[key]

        out: dict = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i in idx:
                if e[i]:
                    c = c * pw(i, e[i])
                    e2[i] = 0
            e2 = tuple(e2)
            s = out.get(e2)
            out[e2] = c if s is None else s + c
        return MPoly(self.ring, out)

    def sorted_terms(self) -> list[tuple[tuple, RingElem]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def serialize(self) -> str:
        """Deterministic text: graded-lex sorted terms with explicit exponents."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            ms = mono_str(e)
            parts.append(f"({c})" + (f"*{ms}" if ms else ""))
        return " + ".join(parts)

    __str__ = serialize

    def __repr__(self) -> str:
        return f"MPoly({self.serialize()} over {self.ring.descriptor})"


def mpoly_arith(op: str, f: MPoly, g: MPoly) -> MPoly | bool:
    """Dispatch helper: ``op`` is one of add, sub, mul, eq."""
    return {"add": lambda: f + g, "sub": lambda: f - g,
            "mul": lambda: f * g, "eq": lambda: f == g}[op]()


def is_regular(f: MPoly) -> bool:
    """At least one coefficient is a unit, so ``f`` is not a zero divisor."""
    return any(is_unit(c) for c in f.terms.values())


def evaluate(f: MPoly, assignment: Mapping[str, RingElem]) -> MPoly:
    return f.evaluate(assignment)


class MFraction:
    """``numerator / denominator``; never reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        den = den if den is not None else MPoly.one(num.ring)
        num._same(den)
        if not den:
            raise ZeroDivisionError("MFraction with zero denominator")
        self.num = num
        self.den = den

    @property
    def ring(self) -> ModulusRing:
        return self.num.ring

    def __add__(self, other: MFraction) -> MFraction:
        if self.den == other.den:
            return MFraction(self.num + other.num, self.den)
        return MFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: MFraction) -> MFraction:
        return self + MFraction(-other.num, other.den)

    def __mul__(self, other: MFraction) -> MFraction:
        return MFraction(self.num * other.num, self.den * other.den)

    def evaluate(self, assignment) -> MFraction:
        return MFraction(self.num.evaluate(assignment), self.den.evaluate(assignment))

    def cross_difference(self, other: MFraction) -> MPoly:
        """``N1*D2 - N2*D1``, the cleared form of ``self - other``."""
        if self.den == other.den:
            return self.num - other.num
        return self.num * other.den - other.num * self.den

    def __repr__(self) -> str:
        return f"MFraction(({self.num}) / ({self.den}))"
