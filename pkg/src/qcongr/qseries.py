"""q-shifted factorials and truncated q-hypergeometric sums.

A sum is described declaratively by a :class:`SeriesSpec`; the functions here
expand it term by term.  Three evaluation modes share one term stream:

* numeric: every parameter is a number (possibly after assigning values to
  the symbolic variables) and the result is a single ring element;
* cleared: symbolic denominator factors are merged by family into one common
  denominator ``D`` and the result is a numerator MPoly over ``D``;
* exact: as cleared, over the Laurent ring with no modulus at all.

Numeric factors ``1 - c*q**e`` are split as ``Phi_n**v * unit`` when the ring
is a cyclotomic power, so a term is handled in the local ring at ``Phi_n``:
positive net valuation is allowed (the term is divisible by ``Phi_n``), a
negative one is reported as :class:`NonInvertible`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .multipoly import ONE, VARIABLES, MFraction, MPoly, mono_str, var_index
from .quotient import NonInvertible, PeriodicView, invert, is_unit


class DegenerateDenominator(NonInvertible):
    """A denominator factor is identically zero, e.g. ``1 - q**0``."""


class PoleError(NonInvertible):
    """An evaluation point makes a symbolic denominator factor non-invertible."""


class IntegralityViolation(ValueError):
    """An exponent or bound that must be an integer is not."""


class NonTerminating(ValueError):
    """A basic hypergeometric series does not terminate within the top index."""


def exact_quotient(num: int, den: int, text: str = "") -> int:
    """``num / den`` as an int, or :class:`IntegralityViolation`."""
    if den == 0:
        raise IntegralityViolation(f"division by zero in {text or 'expression'}")
    q, r = divmod(num, den)
    if r:
        raise IntegralityViolation(f"{text or f'{num}/{den}'} is not an integer ({Fraction(num, den)})")
    return q


# -- declarative types --------------------------------------------------------

@dataclass(frozen=True)
class QAtom:
    """``coeff * q**qexp * mono``; ``mono`` is an exponent vector over x, y, a, m.

    Monomial exponents are either all nonnegative or all nonpositive; the
    latter covers arguments such as ``(q*x)**-1``.
    """

    coeff: Fraction = Fraction(1)
    qexp: int = 0
    mono: tuple = ONE

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "mono", tuple(self.mono))
        if not self.coeff:
            raise ValueError("QAtom coefficient must be nonzero")
        if len(self.mono) != len(VARIABLES):
            raise ValueError("QAtom monomial must have one exponent per variable")
        if any(e > 0 for e in self.mono) and any(e < 0 for e in self.mono):
            raise ValueError("QAtom monomial mixes positive and negative exponents")

    @classmethod
    def q(cls, e: int = 0, coeff=1) -> QAtom:
        return cls(Fraction(coeff), e, ONE)

    @classmethod
    def var(cls, name: str, qexp: int = 0, coeff=1, power: int = 1) -> QAtom:
        mono = [0, 0, 0, 0]
        mono[var_index(name)] = power
        return cls(Fraction(coeff), qexp, tuple(mono))

    @property
    def is_numeric(self) -> bool:
        return self.mono == ONE

    def variables(self) -> set[str]:
        return {VARIABLES[i] for i, e in enumerate(self.mono) if e}

    def __str__(self) -> str:
        parts = []
        c = self.coeff
        if abs(c) != 1:
            parts.append(str(abs(c)))
        ms = mono_str(self.mono)
        if ms:
            parts.append(ms)
        if self.qexp:
            parts.append("q" if self.qexp == 1 else f"q^{self.qexp}")
        body = "*".join(parts) or "1"
        return ("-" if c < 0 else "") + body


@dataclass(frozen=True)
class Affine:
    """The map ``k -> a*k + b``."""

    a: int = 1
    b: int = 0

    def __call__(self, k: int) -> int:
        return self.a * k + self.b

    @property
    def is_fixed(self) -> bool:
        return self.a == 0

    def __str__(self) -> str:
        if self.a == 0:
            return str(self.b)
        head = "k" if self.a == 1 else f"{self.a}*k"
        if self.b > 0:
            return f"{head}+{self.b}"
        if self.b < 0:
            return f"{head}-{-self.b}"
        return head


K = Affine(1, 0)


def fixed(n: int) -> Affine:
    return Affine(0, n)


@dataclass(frozen=True)
class PochSpec:
    """``(atom; q**step)_length``."""

    atom: QAtom
    step: int
    length: Affine = K

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("PochSpec step must be >= 1")
        if self.length.a < 0:
            raise ValueError("PochSpec length must be nondecreasing in k")

    def factor(self, j: int) -> tuple[Fraction, int, tuple]:
        """The ``j``-th factor as ``(c, e, mono)`` meaning ``1 - c*q**e*mono``."""
        a = self.atom
        return a.coeff, a.qexp + self.step * j, a.mono

    def __str__(self) -> str:
        return f"({self.atom};q^{self.step})_{self.length}"


@dataclass(frozen=True)
class SeriesSpec:
    """``sum_{k=0}^{top} const * mono * prod(num) / prod(den) * q**power(k)``."""

    num: tuple[PochSpec, ...]
    den: tuple[PochSpec, ...]
    power: Affine
    top: int
    label: str = ""
    const: Fraction = Fraction(1)
    mono: tuple = ONE

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(self.num))
        object.__setattr__(self, "den", tuple(self.den))
        object.__setattr__(self, "const", Fraction(self.const))
        object.__setattr__(self, "mono", tuple(self.mono))

    def variables(self) -> set[str]:
        out = {VARIABLES[i] for i, e in enumerate(self.mono) if e}
        for p in self.num + self.den:
            out |= p.atom.variables()
        return out

    def describe(self) -> str:
        num = "".join(str(p) for p in self.num) or "1"
        den = "".join(str(p) for p in self.den) or "1"
        head = "" if self.const == 1 else f"{self.const}*"
        ms = mono_str(self.mono)
        if ms:
            head += ms + "*"
        return f"sum_{{k=0}}^{{{self.top}}} {head}{num}/{den} q^({self.power})"


def closed_form_series(num: Sequence[PochSpec] = (), den: Sequence[PochSpec] = (), qexp: int = 0,
                       const=1, mono: tuple = ONE, label: str = "") -> SeriesSpec:
    """A single product term; all Pochhammer lengths must be fixed."""
    for p in list(num) + list(den):
        if not p.length.is_fixed:
            raise ValueError("closed forms need fixed Pochhammer lengths")
    return SeriesSpec(tuple(num), tuple(den), Affine(0, qexp), 0, label, Fraction(const), mono)


def substitute_qpower(series: SeriesSpec, name: str, e: int) -> SeriesSpec:
    """Replace the variable ``name`` by ``q**e`` throughout ``series``."""
    i = var_index(name)

    def atom(a: QAtom) -> QAtom:
        if not a.mono[i]:
            return a
        mono = list(a.mono)
        p = mono[i]
        mono[i] = 0
        return QAtom(a.coeff, a.qexp + e * p, tuple(mono))

    def poch(p: PochSpec) -> PochSpec:
        return PochSpec(atom(p.atom), p.step, p.length)

    mono = list(series.mono)
    shift = e * mono[i]
    mono[i] = 0
    return SeriesSpec(tuple(poch(p) for p in series.num), tuple(poch(p) for p in series.den),
                      Affine(series.power.a, series.power.b + shift), series.top, series.label,
                      series.const, tuple(mono))


# -- term stream --------------------------------------------------------------

@dataclass
class Term:
    """Factors that become active at index ``k`` plus the full prefactor.

    Each factor is ``(c, e, mono, family, j)`` standing for ``1 - c*q**e*mono``
    with ``mono >= 0``; ``family`` identifies the Pochhammer symbol it comes
    from.  ``const * q**qexp * mono`` is the complete scalar prefactor of the
    term (it absorbs the normalization of factors with negative monomials).
    """

    k: int
    num: list
    den: list
    const: Fraction
    qexp: int
    mono: tuple
    dead: bool = False
    dead_factor: tuple | None = None


def _normalize(c: Fraction, e: int, mono: tuple):
    """``1 - c q^e mono`` with ``mono <= 0`` as ``(-c) q^e mono (1 - q^-e mono^-1 / c)``."""
    if all(x >= 0 for x in mono):
        return None
    return -c, e, mono, (1 / c, -e, tuple(-x for x in mono))


def _family_keys(pochs: Sequence[PochSpec]) -> list[tuple]:
    seen: dict = {}
    keys = []
    for p in pochs:
        base = (p.atom, p.step)
        occ = seen.get(base, 0)
        seen[base] = occ + 1
        keys.append(base + (occ,))
    return keys


def family_factor(key: tuple, j: int) -> tuple[Fraction, int, tuple]:
    """Normalized ``j``-th factor of the family ``key``."""
    atom, step = key[0], key[1]
    c, e, mono = atom.coeff, atom.qexp + step * j, atom.mono
    nrm = _normalize(c, e, mono)
    return (c, e, mono) if nrm is None else nrm[3]


def terms(series: SeriesSpec) -> Iterator[Term]:
    """Yield one :class:`Term` per index; stops after the first dead term.

    A term is dead when a numeric numerator factor is identically zero; every
    later term then vanishes as well because lengths never decrease.
    """
    nkeys = _family_keys(series.num)
    dkeys = _family_keys(series.den)
    ncur = [0] * len(series.num)
    dcur = [0] * len(series.den)
    const = series.const
    qexp = 0
    mono = list(series.mono)
    for k in range(series.top + 1):
        new_num, new_den = [], []
        dead, dead_factor = False, None
        for side, pochs, keys, cur, sign in (
                (new_num, series.num, nkeys, ncur, 1), (new_den, series.den, dkeys, dcur, -1)):
            for i, p in enumerate(pochs):
                target = p.length(k)
                if target < 0:
                    raise ValueError(f"negative Pochhammer length {target} at k={k} in {p}")
                if target < cur[i]:
                    raise ValueError(f"Pochhammer length decreases at k={k} in {p}")
                for j in range(cur[i], target):
                    c, e, mn = p.factor(j)
                    nrm = _normalize(c, e, mn)
                    if nrm is not None:
                        sc, se, sm, (c, e, mn) = nrm
                        if sign > 0:
                            const *= sc
                            qexp += se
                            mono = [x + y for x, y in zip(mono, sm)]
                        else:
                            const /= sc
                            qexp -= se
                            mono = [x - y for x, y in zip(mono, sm)]
                    if sign > 0 and mn == ONE and c == 1 and e == 0:
                        dead, dead_factor = True, (p, j)
                    side.append((c, e, mn, keys[i], j))
                cur[i] = target
        yield Term(k, new_num, new_den, const, qexp + series.power(k), tuple(mono), dead, dead_factor)
        if dead:
            return


def _describe_factor(c, e, mono) -> str:
    return f"1 - ({QAtom(c, e, mono)})"


# -- single objects -----------------------------------------------------------

def pochhammer(spec: PochSpec, k: int, ring) -> MPoly:
    """``prod_{j<k} (1 - atom*q**(step*j))`` as an MPoly over ``ring``."""
    if any(x < 0 for x in spec.atom.mono):
        raise ValueError("pochhammer MPoly needs a nonnegative monomial; use summand")
    out = MPoly.one(ring)
    for j in range(k):
        c, e, mono = spec.factor(j)
        out = out.mul_linear(c, e, mono)
    return out


def _monomial_poly(ring, coeff, mono) -> tuple[MPoly, MPoly]:
    """Split ``coeff * mono`` (mono may be negative) into numerator and denominator monomials."""
    pos = tuple(max(x, 0) for x in mono)
    neg = tuple(max(-x, 0) for x in mono)
    return MPoly(ring, {pos: coeff}), MPoly(ring, {neg: ring.one})


def summand(series: SeriesSpec, k: int, ring) -> MFraction:
    """The ``k``-th term as an unreduced fraction of MPolys."""
    if k > series.top:
        raise ValueError(f"k={k} exceeds top index {series.top}")
    num = MPoly.one(ring)
    den = MPoly.one(ring)
    const = series.const
    qexp = series.power(k)
    mono = list(series.mono)
    for pochs, sign in ((series.num, 1), (series.den, -1)):
        for p in pochs:
            for j in range(p.length(k)):
                c, e, mn = p.factor(j)
                nrm = _normalize(c, e, mn)
                if nrm is not None:
                    sc, se, sm, (c, e, mn) = nrm
                    if sign > 0:
                        const *= sc
                        qexp += se
                        mono = [x + y for x, y in zip(mono, sm)]
                    else:
                        const /= sc
                        qexp -= se
                        mono = [x - y for x, y in zip(mono, sm)]
                if sign > 0:
                    num = num.mul_linear(c, e, mn)
                else:
                    den = den.mul_linear(c, e, mn)
    if not den:
        raise DegenerateDenominator(f"denominator of term k={k} vanishes", context=f"k={k}")
    mnum, mden = _monomial_poly(ring, ring.qpow(qexp).scale(const), tuple(mono))
    return MFraction(num * mnum, den * mden)


# -- numeric sums ---------------------------------------------------------------

def _point_value(mono: tuple, values: Sequence):
    """Value of a monomial at the point; an int whenever the point is integral."""
    out = 1
    for v, e in zip(values, mono):
        if e:
            if v is None:
                raise ValueError("symbolic variable without an assigned value")
            if v == 0 and e < 0:
                raise PoleError("negative power of a variable evaluated at 0")
            out *= v ** e if e > 0 else Fraction(1) / v ** -e
    return out


def _small(c: Fraction):
    return c.numerator if c.denominator == 1 else c


@lru_cache(maxsize=256)
def compiled_terms(series: SeriesSpec) -> tuple:
    """The term stream as plain tuples, integral coefficients as ints (cached)."""
    out = []
    for t in terms(series):
        num = tuple((_small(c), e, mono) for c, e, mono, _k, _j in t.num)
        den = tuple((_small(c), e, mono) for c, e, mono, _k, _j in t.den)
        out.append((t.k, num, den, _small(t.const), t.qexp, t.mono, t.dead))
    return tuple(out)


def _view(ring) -> PeriodicView:
    """The cached lazy view mod ``q^n - 1`` of a period ring."""
    view = ring.__dict__.get("_periodic_view")
    if view is None:
        view = ring._periodic_view = PeriodicView(ring)
    return view


def sum_numeric_parts(series: SeriesSpec, ring, assignment: Mapping[str, Fraction] | None = None):
    """``(A, U)`` with ``sum = A / U`` and ``U`` a unit of ``ring``.

    ``A`` is accumulated by Horner's rule over the denominator units, so no
    inversion happens here.  Symbolic variables must all be assigned rational
    values; a denominator factor that the assignment makes non-invertible
    raises :class:`PoleError`.
    """
    values = [None] * len(VARIABLES)
    for name, v in (assignment or {}).items():
        values[var_index(name)] = _small(Fraction(v))
    if getattr(ring, "_period", None) is not None:
        view = _view(ring)
        A, U = _numeric_loop(series, view, values)
        return view.project(A), view.project(U)
    return _numeric_loop(series, ring, values)


def _numeric_loop(series: SeriesSpec, ring, values: list):
    m = ring.phi_power
    one = ring.one
    P = one              # numerator units, running product
    U = one              # denominator units, running product
    A = ring.zero        # Horner accumulator
    V = 0                # net Phi_n-adic valuation of the current term
    phi = None
    for k, tnum, tden, tconst, tqexp, tmono, tdead in compiled_terms(series):
        for c, e, mono in tnum:
            if mono != ONE:
                c = c * _point_value(mono, values)
                if not c:
                    continue
            if c == 1 and e == 0:
                continue  # dead term: handled below
            v, u = ring.split_binomial(c, e)
            V += v
            P = P.mul_binomial(c, e) if v == 0 else P * u
        if tdead:
            break  # the dead term and everything after it vanish
        for c, e, mono in tden:
            symbolic = mono != ONE
            if symbolic:
                c = c * _point_value(mono, values)
                if not c:
                    continue
            if c == 1 and e == 0:
                if symbolic:
                    raise PoleError(f"evaluation point zeroes a denominator factor at k={k}",
                                    context=f"k={k}")
                raise DegenerateDenominator(
                    f"denominator factor 1 - q^0 at k={k}", context=f"k={k}")
            v, u = ring.split_binomial(c, e)
            if v and symbolic:
                raise PoleError(f"evaluation point makes {_describe_factor(c, e, ONE)} a zero divisor",
                                element=u, context=f"k={k}")
            V -= v
            if v == 0:
                A = A.mul_binomial(c, e)
                U = U.mul_binomial(c, e)
            else:
                A = A * u
                U = U * u
        if V < 0:
            raise NonInvertible(
                f"term k={k} has a denominator divisible by Phi_{ring.descriptor.n}^{-V}",
                context=f"k={k}")
        if m is not None and V >= m:
            continue
        scalar = tconst * _point_value(tmono, values)
        term = P.mul_qpow(tqexp).scale(scalar)
        if V:
            if phi is None:
                phi = ring.phi_elem()
            term = term * phi ** V
        A = A + term
    return A, U


def sum_numeric(series: SeriesSpec, ring, assignment: Mapping[str, Fraction] | None = None):
    """The sum as a single ring element (all variables numeric)."""
    free = series.variables() - set(assignment or {})
    if free:
        raise ValueError(f"sum_numeric needs values for {sorted(free)}")
    A, U = sum_numeric_parts(series, ring, assignment)
    if U.is_one():
        return A
    return A * invert(U)


# -- cleared (symbolic) sums ----------------------------------------------------

@dataclass
class Layout:
    """Joint denominator layout shared by the sides being compared."""

    lengths: dict = field(default_factory=dict)   # family -> merged length
    offset: list = field(default_factory=lambda: [0, 0, 0, 0])

    def denominator(self, ring) -> MPoly:
        d = MPoly.one(ring)
        for key, L in sorted(self.lengths.items(), key=lambda kv: repr(kv[0])):
            for j in range(L):
                d = d.mul_linear(*family_factor(key, j))
        if any(self.offset):
            d = MPoly(ring, {e: c for e, c in ((tuple(x + y for x, y in zip(e, self.offset)), c)
                                               for e, c in d.terms.items())})
        return d


def _cleared(mono: tuple, key, exact: bool) -> bool:
    return exact or mono != ONE


def joint_layout(sides: Sequence[SeriesSpec], exact: bool = False) -> Layout:
    """Merged denominator families (max length over every live term) and monomial offset."""
    lay = Layout()
    low = [0, 0, 0, 0]
    for s in sides:
        cur: dict = {}
        for t in terms(s):
            if t.dead:
                break
            for c, e, mono, key, j in t.den:
                if _cleared(mono, key, exact):
                    cur[key] = j + 1
            low = [min(a, b) for a, b in zip(low, t.mono)]
        for key, L in cur.items():
            lay.lengths[key] = max(lay.lengths.get(key, 0), L)
    lay.offset = [-x for x in low]
    return lay


def sum_cleared_parts(series: SeriesSpec, ring, layout: Layout, exact: bool = False):
    """``(N, U)`` with ``series = N / (U * D)``, ``D = layout.denominator(ring)``.

    ``N`` is an MPoly, ``U`` a unit of ``ring`` (always one in exact mode,
    where numeric denominators are cleared as well).
    """
    if not exact and getattr(ring, "_period", None) is not None:
        view = _view(ring)
        A, U = _cleared_loop(series, view, layout, exact)
        return MPoly(ring, {e: view.project(v) for e, v in A.terms.items()}), view.project(U)
    return _cleared_loop(series, ring, layout, exact)


def _cleared_loop(series: SeriesSpec, ring, layout: Layout, exact: bool):
    m = ring.phi_power
    one = ring.one
    P = MPoly.one(ring)
    U = one
    A = MPoly(ring)
    V = 0
    phi = None
    cur: dict = {}
    offset = tuple(layout.offset)
    for t in terms(series):
        for c, e, mono, _key, _j in t.num:
            if mono != ONE or exact:
                P = P.mul_linear(c, e, mono)
                continue
            if c == 1 and e == 0:
                continue
            v, u = ring.split_binomial(c, e)
            V += v
            P = P.mul_linear(c, e, ONE) if v == 0 else P.scale(u)
        if t.dead:
            break
        for c, e, mono, key, j in t.den:
            if mono == ONE and c == 1 and e == 0:
                raise DegenerateDenominator(
                    f"denominator factor 1 - q^0 at k={t.k}", context=f"k={t.k}")
            if _cleared(mono, key, exact):
                A = A.mul_linear(c, e, mono)
                cur[key] = j + 1
                continue
            v, u = ring.split_binomial(c, e)
            V -= v
            if v == 0:
                A = A.mul_linear(c, e, ONE)
                U = U.mul_binomial(c, e)
            else:
                A = A.scale(u)
                U = U * u
        if V < 0:
            raise NonInvertible(
                f"term k={t.k} has a denominator divisible by Phi_{ring.descriptor.n}^{-V}",
                context=f"k={t.k}")
        if m is not None and V >= m:
            continue
        coef = ring.qpow(t.qexp).scale(t.const)
        if V:
            if phi is None:
                phi = ring.phi_elem()
            coef = coef * phi ** V
        shift = tuple(a + b for a, b in zip(t.mono, offset))
        if coef.is_one():
            piece = {tuple(a + b for a, b in zip(mono, shift)): v for mono, v in P.terms.items()}
        else:
            piece = {tuple(a + b for a, b in zip(mono, shift)): v * coef for mono, v in P.terms.items()}
        A = A + MPoly(ring, piece)
    for key, L in layout.lengths.items():
        for j in range(cur.get(key, 0), L):
            A = A.mul_linear(*family_factor(key, j))
    return A, U


def sum_symbolic(series: SeriesSpec, ring) -> MFraction:
    """The sum over its merged denominator, numeric denominator units inverted."""
    layout = joint_layout([series])
    N, U = sum_cleared_parts(series, ring, layout)
    if not U.is_one():
        N = N.scale(invert(U))
    return MFraction(N, layout.denominator(ring))


def degree_bounds(sides: Sequence[SeriesSpec]) -> dict[str, int]:
    """Per-variable degree bound of ``x^offset * D * (side_1 - side_2 ...)``.

    ``D`` is the product of the symbolic denominator families at their merged
    lengths; the bound is what the point-evaluation strategy interpolates.
    """
    lay = joint_layout(sides)
    ddeg = [0, 0, 0, 0]
    for key, L in lay.lengths.items():
        c, e, mono = family_factor(key, 0)
        ddeg = [a + L * b for a, b in zip(ddeg, mono)]
    out = [0, 0, 0, 0]
    for s in sides:
        nd = [0, 0, 0, 0]
        dd = [0, 0, 0, 0]
        for t in terms(s):
            if t.dead:
                break
            for c, e, mono, _k, _j in t.num:
                nd = [a + b for a, b in zip(nd, mono)]
            for c, e, mono, _k, _j in t.den:
                dd = [a + b for a, b in zip(dd, mono)]
            deg = [n_ + D + mo + off - d_ for n_, D, mo, off, d_ in zip(nd, ddeg, t.mono, lay.offset, dd)]
            out = [max(a, b) for a, b in zip(out, deg)]
    return {VARIABLES[i]: out[i] for i in range(4) if out[i] > 0}


def is_regular_multiplier(layout: Layout, units: Sequence, ring) -> bool:
    """The full clearing multiplier ``U * x^offset * D`` is a non-zero-divisor."""
    from .multipoly import is_regular
    if not all(is_unit(u) for u in units):
        return False
    return is_regular(layout.denominator(ring))


# -- basic hypergeometric series -----------------------------------------------

def _poch_value(a: Fraction, q: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for j in range(k):
        out *= 1 - a * q ** j
    return out


def phi_series(upper: Sequence, lower: Sequence, base: int, argument, top: int,
               q, values: Mapping[str, Fraction] | None = None) -> Fraction:
    """Exact terminating ``r+1 phi r`` with base ``q**base`` at a rational ``q``.

    Parameters are :class:`QAtom` values (``coeff * q**qexp * mono``) or plain
    rationals; symbolic monomials take their values from ``values``.  The
    series must terminate at or before ``top``: some upper parameter equals
    ``(q**base)**(-N)`` with ``N <= top``, or the argument is zero.
    """
    q = Fraction(q)
    vals = [None] * len(VARIABLES)
    for name, v in (values or {}).items():
        vals[var_index(name)] = Fraction(v)

    def num(p) -> Fraction:
        if isinstance(p, QAtom):
            return p.coeff * q ** p.qexp * _point_value(p.mono, vals)
        return Fraction(p)

    a = [num(p) for p in upper]
    b = [num(p) for p in lower]
    z = num(argument)
    qb = q ** base
    if not z:
        return Fraction(1)
    if not any(x == qb ** (-N) for x in a for N in range(top + 1)):
        raise NonTerminating(f"no upper parameter forces termination within k <= {top}")
    total = Fraction(0)
    term = Fraction(1)
    for k in range(top + 1):
        total += term
        ratio = z
        for x in a:
            ratio *= 1 - x * qb ** k
        den = 1 - qb ** (k + 1)
        for y in b:
            den *= 1 - y * qb ** k
        if not den:
            # also when ratio == 0: the next term is 0/0, not a clean stop
            raise DegenerateDenominator(f"denominator vanishes at k={k + 1}")
        if not ratio:
            return total
        term = term * ratio / den
    return total
