"""Every congruence and closed-form identity of the catalogue, as data.

Each builder receives integer parameters and returns a
:class:`CongruenceClaim` whose sides are built lazily; bounds such as
``(n+1)/d`` are checked for integrality only when the sides are needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from ..multipoly import ONE
from ..qseries import (
    K,
    Affine,
    PochSpec,
    QAtom,
    SeriesSpec,
    closed_form_series,
    exact_quotient,
    fixed,
)
from .model import (
    CongruenceClaim,
    ExactIdentity,
    Hypothesis,
    ParametricA,
    PhiPower,
    make_params,
)


def q(e: int = 0, c=1) -> QAtom:
    return QAtom.q(e, c)


def v(name: str, qexp: int = 0, coeff=1, power: int = 1) -> QAtom:
    return QAtom.var(name, qexp, coeff, power)


def xy(qexp: int) -> QAtom:
    return QAtom(Fraction(1), qexp, (1, 1, 0, 0))


def P(atom: QAtom, step: int, length=K) -> PochSpec:
    if isinstance(length, int):
        length = fixed(length)
    return PochSpec(atom, step, length)


def S(num, den, power: Affine, top: int, label: str = "") -> SeriesSpec:
    return SeriesSpec(tuple(num), tuple(den), power, top, label)


def sign(e: int) -> int:
    return -1 if e % 2 else 1


def q_int(n: int) -> tuple[list[PochSpec], list[PochSpec]]:
    """``[n]_q = (q^n;q)_1 / (q;q)_1`` as Pochhammer pieces."""
    return [P(q(n), 1, 1)], [P(q(1), 1, 1)]


ZERO = closed_form_series(const=0, label="0")


def _mod(n: int, r: int, m: int) -> bool:
    return m > 0 and (n - r) % m == 0


_REGISTRY: dict[str, tuple[Callable[..., CongruenceClaim], tuple[str, ...], str]] = {}


def register(name: str, params: tuple[str, ...], summary: str):
    def deco(fn):
        _REGISTRY[name] = (fn, params, summary)
        return fn
    return deco


def names() -> list[str]:
    return list(_REGISTRY)


def param_names(name: str) -> tuple[str, ...]:
    return _REGISTRY[name][1]


def summary(name: str) -> str:
    return _REGISTRY[name][2]


def builtin(name: str, **params: int) -> CongruenceClaim:
    """Claim ``name`` instantiated at ``params`` (``d``, ``n``, ``s`` ... as needed)."""
    try:
        fn, wanted, _ = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown claim {name!r}; known: {', '.join(_REGISTRY)}") from None
    missing = [p for p in wanted if p not in params]
    if missing:
        raise TypeError(f"{name} needs parameters {', '.join(missing)}")
    extra = set(params) - set(wanted) - {"power"}
    if extra:
        raise TypeError(f"{name} does not take parameters {', '.join(sorted(extra))}")
    for k, val in params.items():
        if not isinstance(val, int):
            raise TypeError(f"parameter {k} must be an integer")
    if params.get("n", 1) < 1 or params.get("d", 1) < 1:
        raise ValueError("n and d must be positive")
    if "s" in params and params["s"] not in (-1, 1):
        raise ValueError("s must be -1 or 1")
    return fn(**params)


def _claim(name, params, modulus, variables, hyp_text, hyp, build, notes="") -> CongruenceClaim:
    return CongruenceClaim(name, make_params(params), modulus, frozenset(variables),
                           Hypothesis(hyp_text, hyp), build, notes)


def _phi(n: int, power: int | None, default: int) -> PhiPower:
    return PhiPower(n, default if power is None else power)


# -- congruences in one variable x ----------------------------------------------------------------

@register("in-2", ("n",), "q-analogue of the Van Hamme sum, as originally stated")
def in_2(n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        top = exact_quotient(n - 1, 2, "(n-1)/2")
        lhs = S([P(q(2), 4), P(q(2), 4), P(q(2), 4)], [P(q(2), 2), P(q(2), 2), P(q(4), 4)],
                Affine(2, 0), top)
        if n % 4 == 1:
            L = exact_quotient(n - 1, 4, "(n-1)/4")
            rhs = closed_form_series([P(q(2), 4, L)] * 2, [P(q(4), 4, L)] * 2,
                                     qexp=exact_quotient(n - 1, 2, "(n-1)/2"))
        else:
            rhs = ZERO
        return lhs, rhs
    params = {"n": n} if power is None else {"n": n, "power": power}
    return _claim("in-2", params, _phi(n, power, 2), set(), "n odd",
                  lambda p: p["n"] % 2 == 1, build,
                  "numerator (q^2;q^4)_k^2 (q^2;q^4)_k kept as stated")


@register("in-3", ("d", "n"), "truncated form of th-2 (sums to (n-1)/d and (n-1)/(2d))")
def in_3(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        lhs = S([P(q(1), d), P(q(1), d), P(v("x"), d)], [P(q(d), d), P(q(d + 2), 2 * d)],
                Affine(d, 0), exact_quotient(n - 1, d, "(n-1)/d"))
        rhs = S([P(q(1), 2 * d), P(q(1), 2 * d), P(v("x", power=2), 2 * d)],
                [P(q(2 * d), 2 * d), P(q(d + 2), 2 * d)], Affine(2 * d, 0),
                exact_quotient(n - 1, 2 * d, "(n-1)/(2*d)"))
        return lhs, rhs
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("in-3", params, _phi(n, power, 2), {"x"}, "d >= 2, n = 1 (mod 2d)",
                  lambda p: p["d"] >= 2 and _mod(p["n"], 1, 2 * p["d"]), build)


@register("th-2", ("d", "n"), "sum with (q;q^d)_k^2 against the q^(2d) sum, mod Phi_n^2")
def th_2(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        lhs = S([P(q(1), d), P(q(1), d), P(v("x"), d)], [P(q(d), d), P(q(d + 2), 2 * d)],
                Affine(d, 0), n - 1)
        rhs = S([P(q(1), 2 * d), P(q(1), 2 * d), P(v("x", power=2), 2 * d)],
                [P(q(2 * d), 2 * d), P(q(d + 2), 2 * d)], Affine(2 * d, 0), n - 1)
        return lhs, rhs
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("th-2", params, _phi(n, power, 2), {"x"}, "d >= 2, n = 1 (mod 2d)",
                  lambda p: p["d"] >= 2 and _mod(p["n"], 1, 2 * p["d"]), build)


@register("th-1", ("d", "n"), "sum with (q^-1;q^d)_k^2 against the q^(2d) sum, mod Phi_n^2")
def th_1(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        lhs = S([P(q(-1), d), P(q(-1), d), P(v("x"), d)], [P(q(d), d), P(q(d - 2), 2 * d)],
                Affine(d, 0), n - 1)
        rhs = S([P(q(-1), 2 * d), P(q(-1), 2 * d), P(v("x", power=2), 2 * d)],
                [P(q(2 * d), 2 * d), P(q(d - 2), 2 * d)], Affine(2 * d, 0), n - 1)
        return lhs, rhs
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("th-1", params, _phi(n, power, 2), {"x"}, "d >= 3, n = -1 (mod 2d)",
                  lambda p: p["d"] >= 3 and _mod(p["n"], -1, 2 * p["d"]), build)


def _th20_rhs(n: int) -> SeriesSpec:
    return S([P(q(1), 4), P(q(1), 4)], [P(q(4), 4)], Affine(4, 0), n - 1)


@register("th-2-0", ("n",), "x = q^2 specialization of th-2 with d = 2")
def th_2_0(n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        lhs = S([P(q(1), 2), P(q(1), 2)], [P(q(4), 4)], Affine(2, 0), n - 1)
        return lhs, _th20_rhs(n)
    params = {"n": n} if power is None else {"n": n, "power": power}
    return _claim("th-2-0", params, _phi(n, power, 2), set(), "n = 1 (mod 4)",
                  lambda p: _mod(p["n"], 1, 4), build)


@register("th-2-1", ("n",), "x = -q^2 specialization of th-2 with d = 2")
def th_2_1(n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        lhs = S([P(q(1), 2), P(q(1), 2)], [P(q(2), 2), P(q(2), 2)], Affine(2, 0), n - 1)
        return lhs, _th20_rhs(n)
    params = {"n": n} if power is None else {"n": n, "power": power}
    return _claim("th-2-1", params, _phi(n, power, 2), set(), "n = 1 (mod 4)",
                  lambda p: _mod(p["n"], 1, 4), build)


def _th22_hyp(p) -> bool:
    return p["d"] >= 2 and p["n"] > 1 and p["n"] % 2 == 1 and _mod(p["n"], -1, p["d"])


@register("th-2-2", ("d", "n"), "truncated sum at x = 1 against its closed form")
def th_2_2(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        top = exact_quotient(n + 1, d, "(n+1)/d")
        lhs = S([P(q(-1), d)], [P(q(d), d)], Affine(d, 0), top)
        sgn = sign(exact_quotient(n + d + 1, d, "(n+d+1)/d"))
        e = exact_quotient(n * n - d * n + d - 1, 2 * d, "(n^2-d*n+d-1)/(2*d)")
        qn, q1 = q_int(n)
        return lhs, closed_form_series(qn, q1, qexp=e, const=sgn)
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("th-2-2", params, _phi(n, power, 2), set(),
                  "d >= 2, n > 1 odd, n = -1 (mod d)", _th22_hyp, build)


def _th23_hyp(p) -> bool:
    return p["d"] >= 1 and p["n"] > 1 and p["n"] % 2 == 1 and _mod(p["n"], 1, 2 * p["d"])


@register("th-2-3", ("d", "n"), "truncated sum at x = 1, vanishing mod Phi_n")
def th_2_3(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        top = exact_quotient(n - 1, 2 * d, "(n-1)/(2*d)")
        lhs = S([P(q(1), 2 * d)], [P(q(2 * d), 2 * d)], Affine(2 * d, 0), top)
        return lhs, ZERO
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("th-2-3", params, _phi(n, power, 1), set(),
                  "d >= 1, n > 1 odd, n = 1 (mod 2d)", _th23_hyp, build)


@register("th-2-4", ("d", "n"), "symbolic x against its closed form")
def th_2_4(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        L = exact_quotient(n + 1, d, "(n+1)/d")
        lhs = S([P(q(-1), d), P(v("x"), d)], [P(q(d), d), P(v("x", d - 1), d)], Affine(d, 0), L)
        sgn = sign(exact_quotient(n + d + 1, d, "(n+d+1)/d"))
        e = -exact_quotient(n * n + d * n - d - 1, 2 * d, "(n^2+d*n-d-1)/(2*d)")
        qn, q1 = q_int(n)
        rhs = closed_form_series(qn + [P(v("x", -1, power=-1), d, L)],
                                 q1 + [P(v("x", 0, power=-1), d, L)], qexp=e, const=sgn)
        return lhs, rhs
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("th-2-4", params, _phi(n, power, 2), {"x"},
                  "d >= 2, n > 1 odd, n = -1 (mod d)", _th22_hyp, build)


@register("th-2-5", ("d", "n"), "symbolic x, vanishing mod Phi_n")
def th_2_5(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        top = exact_quotient(n - 1, 2 * d, "(n-1)/(2*d)")
        lhs = S([P(q(1), 2 * d), P(v("x"), 2 * d)], [P(q(2 * d), 2 * d), P(v("x", 2 * d + 1), 2 * d)],
                Affine(2 * d, 0), top)
        return lhs, ZERO
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("th-2-5", params, _phi(n, power, 1), {"x"},
                  "d >= 1, n > 1 odd, n = 1 (mod 2d)", _th23_hyp, build)


def _th3_hyp(p) -> bool:
    return p["d"] >= 2 and p["s"] in (-1, 1) and _mod(p["n"], p["s"], 2 * p["d"])


@register("th-3", ("d", "s", "n"), "sign-twisted sum with shift s (mod Phi_n)")
def th_3(d: int, s: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        lhs = S([P(v("x"), d), P(q(s), d)], [P(q(d), d)], Affine(d, 0), n - 1)
        rhs = S([P(v("x", power=2), 2 * d), P(q(s), 2 * d)], [P(q(2 * d), 2 * d)],
                Affine(2 * d, 0), n - 1)
        return lhs, rhs
    params = {"d": d, "s": s, "n": n}
    if power is not None:
        params["power"] = power
    return _claim("th-3", params, _phi(n, power, 1), {"x"}, "d >= 2, s in {-1,1}, n = s (mod 2d)",
                  _th3_hyp, build)


@register("th-5", ("d", "n"), "symbolic x and y (mod Phi_n)")
def th_5(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        lhs = S([P(v("x"), d), P(v("y"), d)], [P(xy(d), 2 * d)], Affine(d, 0), n - 1)
        rhs = S([P(v("x"), 2 * d), P(v("y"), 2 * d)], [P(xy(d), 2 * d)], Affine(2 * d, 0), n - 1)
        return lhs, rhs
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("th-5", params, _phi(n, power, 1), {"x", "y"}, "d >= 1, n odd",
                  lambda p: p["d"] >= 1 and p["n"] % 2 == 1, build)


# -- congruences in the parameter a ----------------------------------------------

def _s3_sides(d: int, s: int, n: int, rhs_den: list[PochSpec] | None = None):
    a_num = [P(v("a", s), d), P(v("a", s, power=-1), d)]
    lhs = S(a_num + [P(v("x"), d)], [P(q(d), d), P(q(d + 2 * s), 2 * d)], Affine(d, 0), n - 1)
    a_num2 = [P(v("a", s), 2 * d), P(v("a", s, power=-1), 2 * d)]
    den2 = rhs_den if rhs_den is not None else [P(q(2 * d), 2 * d), P(q(d + 2 * s), 2 * d)]
    rhs = S(a_num2 + [P(v("x", power=2), 2 * d)], den2, Affine(2 * d, 0), n - 1)
    return lhs, rhs


@register("s-3", ("d", "s", "n"), "parametric congruence modulo (1-aq^n)(a-q^n)")
def s_3(d: int, s: int, n: int) -> CongruenceClaim:
    return _claim("s-3", {"d": d, "s": s, "n": n}, ParametricA(n, (n, -n)), {"x", "a"},
                  "d >= 3, s in {-1,1}, n = s (mod 2d)",
                  lambda p: p["d"] >= 3 and _mod(p["n"], p["s"], 2 * p["d"]),
                  lambda: _s3_sides(d, s, n))


@register("s-3-1", ("n",), "parametric congruence, the d = 2, s = 1 companion")
def s_3_1(n: int) -> CongruenceClaim:
    return _claim("s-3-1", {"n": n}, ParametricA(n, (n, -n)), {"x", "a"}, "n = 1 (mod 4)",
                  lambda p: _mod(p["n"], 1, 4),
                  lambda: _s3_sides(2, 1, n, [P(q(4), 4), P(q(4), 4)]))


@register("s-5", ("d", "s", "n"), "parametric form of th-3 modulo (1-aq^n)")
def s_5(d: int, s: int, n: int) -> CongruenceClaim:
    def build():
        lhs = S([P(v("x"), d), P(v("a", s), d)], [P(q(d), d)], Affine(d, 0), n - 1)
        rhs = S([P(v("x", power=2), 2 * d), P(v("a", s), 2 * d)], [P(q(2 * d), 2 * d)],
                Affine(2 * d, 0), n - 1)
        return lhs, rhs
    return _claim("s-5", {"d": d, "s": s, "n": n}, ParametricA(n, (-n,)), {"x", "a"},
                  "d >= 2, s in {-1,1}, n = s (mod 2d)", _th3_hyp, build)


# -- three symbolic variables ----------------------------------------------------------------

@register("ss-0", ("d", "n"), "symbolic m, x, y (mod Phi_n)")
def ss_0(d: int, n: int, power: int | None = None) -> CongruenceClaim:
    def build():
        m_atom = v("m")
        neg_mq = v("m", d, coeff=-1)
        lhs = S([P(m_atom, d), P(v("x"), d), P(v("y"), d)], [P(neg_mq, d), P(xy(d), 2 * d)],
                Affine(d, 0), n - 1)
        rhs = S([P(v("m", power=2), 2 * d), P(v("x"), 2 * d), P(v("y"), 2 * d)],
                [P(neg_mq, d, Affine(2, 0)), P(xy(d), 2 * d)], Affine(2 * d, 0), n - 1)
        return lhs, rhs
    params = {"d": d, "n": n} if power is None else {"d": d, "n": n, "power": power}
    return _claim("ss-0", params, _phi(n, power, 1), {"m", "x", "y"}, "d >= 1, n odd",
                  lambda p: p["d"] >= 1 and p["n"] % 2 == 1, build,
                  "the notation (m,q^d)_k is read as (m;q^d)_k; m is a full indeterminate")


# -- closed-form identities (exact, no modulus) ----------------------------------

def _ss01_lhs(d: int, n: int) -> SeriesSpec:
    L = exact_quotient(n + 1, d, "(n+1)/d")
    return S([P(q(n - 1), d), P(q(-n - 1), d)], [P(q(d), d), P(q(-1), d)], Affine(d, 0), L)


@register("ss-0-1", ("d", "n"), "q-Chu-Vandermonde evaluation behind th-2-2 (final form)")
def ss_0_1(d: int, n: int) -> CongruenceClaim:
    def build():
        lhs = _ss01_lhs(d, n)
        sgn = -sign(exact_quotient(n + 1, d, "(n+1)/d"))
        e = exact_quotient(n * n - d * n + d - 1, 2 * d, "(n^2-d*n+d-1)/(2*d)")
        qn, q1 = q_int(n)
        return lhs, closed_form_series(qn, q1, qexp=e, const=sgn)
    return _claim("ss-0-1", {"d": d, "n": n}, ExactIdentity(), set(),
                  "d >= 2, n odd, n = -1 (mod d)", _th22_hyp, build)


@register("ss-0-1-mid", ("d", "n"), "q-Chu-Vandermonde evaluation behind th-2-2 (product form)")
def ss_0_1_mid(d: int, n: int) -> CongruenceClaim:
    def build():
        L = exact_quotient(n + 1, d, "(n+1)/d")
        e = exact_quotient(n * n - 1, d, "(n^2-1)/d")
        return _ss01_lhs(d, n), closed_form_series([P(q(-n), d, L)], [P(q(-1), d, L)], qexp=e)
    return _claim("ss-0-1-mid", {"d": d, "n": n}, ExactIdentity(), set(),
                  "d >= 2, n odd, n = -1 (mod d)", _th22_hyp, build)


@register("ss-0-2", ("d", "n"), "q-Chu-Vandermonde evaluation behind th-2-3")
def ss_0_2(d: int, n: int) -> CongruenceClaim:
    def build():
        L = exact_quotient(n - 1, 2 * d, "(n-1)/(2*d)")
        lhs = S([P(q(1 - n), 2 * d), P(q(1 - n), 2 * d)], [P(q(2 * d), 2 * d), P(q(1), 2 * d)],
                Affine(2 * d, 0), L)
        e = -exact_quotient((n - 1) ** 2, 2 * d, "(n-1)^2/(2*d)")
        return lhs, closed_form_series([P(q(n), 2 * d, L)], [P(q(1), 2 * d, L)], qexp=e)
    return _claim("ss-0-2", {"d": d, "n": n}, ExactIdentity(), set(),
                  "d >= 1, n > 1 odd, n = 1 (mod 2d)", _th23_hyp, build)


def _ss04_lhs(d: int, n: int) -> SeriesSpec:
    L = exact_quotient(n + 1, d, "(n+1)/d")
    return S([P(q(n - 1), d), P(q(-n - 1), d), P(v("x"), d)],
             [P(q(d), d), P(q(-1), d), P(v("x", d - 1), d)], Affine(d, 0), L)


@register("ss-0-4", ("d", "n"), "q-Saalschuetz evaluation behind th-2-4 (product form)")
def ss_0_4(d: int, n: int) -> CongruenceClaim:
    def build():
        L = exact_quotient(n + 1, d, "(n+1)/d")
        rhs = closed_form_series([P(q(-n), d, L), P(v("x", -1, power=-1), d, L)],
                                 [P(q(-1), d, L), P(v("x", -n, power=-1), d, L)])
        return _ss04_lhs(d, n), rhs
    return _claim("ss-0-4", {"d": d, "n": n}, ExactIdentity(), {"x"},
                  "d >= 2, n odd, n = -1 (mod d)", _th22_hyp, build)


def _ss04_final(d: int, n: int, e: int) -> SeriesSpec:
    L = exact_quotient(n + 1, d, "(n+1)/d")
    qn, q1 = q_int(n)
    return closed_form_series(qn + [P(v("x", -1, power=-1), d, L)],
                              q1 + [P(v("x", -n, power=-1), d, L)], qexp=e,
                              const=-sign(L))


@register("ss-0-4-final", ("d", "n"), "the last expression of the th-2-4 evaluation, with the exponent as originally stated")
def ss_0_4_final(d: int, n: int) -> CongruenceClaim:
    def build():
        lhs = _ss04_lhs(d, n)
        e = -exact_quotient((n - 1) * (n + 1 - d), 2 * d, "(n-1)*(n+1-d)/(2*d)")
        return lhs, _ss04_final(d, n, e)
    return _claim("ss-0-4-final", {"d": d, "n": n}, ExactIdentity(), {"x"},
                  "d >= 2, n odd, n = -1 (mod d)", _th22_hyp, build,
                  "exponent -(n-1)(n+1-d)/(2d) as originally stated")


@register("ss-0-4-final-fixed", ("d", "n"),
          "the last expression of the th-2-4 evaluation with exponent -(n^2+dn-d-1)/(2d)")
def ss_0_4_final_fixed(d: int, n: int) -> CongruenceClaim:
    def build():
        lhs = _ss04_lhs(d, n)
        e = -exact_quotient(n * n + d * n - d - 1, 2 * d, "(n^2+d*n-d-1)/(2*d)")
        return lhs, _ss04_final(d, n, e)
    return _claim("ss-0-4-final-fixed", {"d": d, "n": n}, ExactIdentity(), {"x"},
                  "d >= 2, n odd, n = -1 (mod d)", _th22_hyp, build,
                  "exponent taken from the statement of th-2-4")


@register("ss-0-5", ("d", "n"), "q-Saalschuetz evaluation behind th-2-5")
def ss_0_5(d: int, n: int) -> CongruenceClaim:
    def build():
        L = exact_quotient(n - 1, 2 * d, "(n-1)/(2*d)")
        lhs = S([P(q(1 - n), 2 * d), P(q(1 - n), 2 * d), P(v("x"), 2 * d)],
                [P(q(2 * d), 2 * d), P(q(1), 2 * d), P(v("x", 2 * d - 2 * n + 1), 2 * d)],
                Affine(2 * d, 0), L)
        rhs = closed_form_series([P(q(n), 2 * d, L), P(v("x", 1, power=-1), 2 * d, L)],
                                 [P(q(1), 2 * d, L), P(v("x", n, power=-1), 2 * d, L)])
        return lhs, rhs
    return _claim("ss-0-5", {"d": d, "n": n}, ExactIdentity(), {"x"},
                  "d >= 1, n > 1 odd, n = 1 (mod 2d)", _th23_hyp, build)


IDENTITY_CLAIMS = ("ss-0-1", "ss-0-1-mid", "ss-0-2", "ss-0-4", "ss-0-4-final",
                   "ss-0-4-final-fixed", "ss-0-5")
PARAMETRIC_CLAIMS = ("s-3", "s-3-1", "s-5")
