"""Verification engine: denominator clearing, point evaluation, specialization.

Every route is exact.  ``verify`` picks the route from the claim's modulus:

* ``PhiPower``: arithmetic in Q[q]/Phi_n^m;
* ``ParametricA``: substitute ``a = q**e`` at each zero of the modulus and
  check exact equality over Q[q, 1/q];
* ``ExactIdentity``: exact equality over Q[q, 1/q].
"""

from __future__ import annotations

import dataclasses
import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..gridsum import cleared_grid
from ..multipoly import ONE, VARIABLES, MPoly
from ..qseries import (
    Affine,
    IntegralityViolation,
    PoleError,
    SeriesSpec,
    degree_bounds,
    is_regular_multiplier,
    joint_layout,
    substitute_qpower,
    sum_cleared_parts,
    sum_numeric_parts,
    summand,
    terms,
)
from ..quotient import LAURENT, NonInvertible, cyclotomic_ring, invert, is_unit
from . import builtins
from .model import (
    CongruenceClaim,
    ExactIdentity,
    Outcome,
    ParametricA,
    PhiPower,
    VerificationReport,
)

STRATEGIES = ("Clearing", "PointEval", "Auto")


class NotRegular(Exception):
    """The clearing multiplier is a zero divisor, so clearing would be unsound."""


def _ms(t0: float, timings: bool) -> float | None:
    return round((time.perf_counter() - t0) * 1000, 3) if timings else None


def degenerate_factor(series: SeriesSpec) -> str | None:
    """Describe the first denominator factor ``1 - q^0`` met before termination."""
    for t in terms(series):
        for c, e, mono, _key, _j in t.den:
            if mono == ONE and c == 1 and e == 0:
                return f"denominator factor 1 - q^0 at k={t.k}"
        if t.dead:
            return None
    return None


# -- the two strategies on a pair of sides ----------------------------------------

def clearing(lhs: SeriesSpec, rhs: SeriesSpec, ring, exact: bool = False) -> str | None:
    """Residue of ``x^off * D * (lhs - rhs)`` serialized, or None if it vanishes.

    Raises :class:`NotRegular` when the multiplier could hide a nonzero
    difference.
    """
    layout = joint_layout([lhs, rhs], exact)
    nl, ul = sum_cleared_parts(lhs, ring, layout, exact)
    nr, ur = sum_cleared_parts(rhs, ring, layout, exact)
    if exact:
        if not layout.denominator(ring):
            raise NotRegular("merged denominator is zero")
        diff = nl - nr
    else:
        if not is_regular_multiplier(layout, [ul, ur], ring):
            raise NotRegular("merged denominator has no unit coefficient")
        diff = nl.scale(ur) - nr.scale(ul)
        if diff:
            diff = diff.scale(invert(ul * ur))
    return diff.serialize() if diff else None


def _candidates() -> Iterable[Fraction]:
    k = 2
    while True:
        yield Fraction(k)
        yield Fraction(-k)
        k += 1


def point_eval(lhs: SeriesSpec, rhs: SeriesSpec, ring, exact: bool = False,
               variables: Iterable[str] = ()) -> tuple[str | None, int]:
    """Compare both sides on a tensor grid of ``B_v + 1`` points per variable.

    ``B_v`` bounds the degree in ``v`` of the cleared difference, so vanishing
    on the grid means vanishing identically (points are distinct rationals,
    their differences are units).  Returns ``(residue or None, grid size)``.
    """
    bounds = degree_bounds([lhs, rhs])
    names = sorted(set(variables) | lhs.variables() | rhs.variables(), key=VARIABLES.index)
    sources = {v: _candidates() for v in names}
    pts = {v: [next(sources[v]) for _ in range(bounds.get(v, 0) + 1)] for v in names}
    if not exact and len(names) > 1:
        fast = _block_grid(lhs, rhs, ring, names, pts)
        if fast is not None:
            return fast
    for _attempt in range(10_000):
        try:
            for combo in itertools.product(*(range(len(pts[v])) for v in names)):
                assign = {v: pts[v][i] for v, i in zip(names, combo)}
                try:
                    al, ul = sum_numeric_parts(lhs, ring, assign)
                    ar, ur = sum_numeric_parts(rhs, ring, assign)
                except PoleError:
                    # retire the offending value of the last variable and start over
                    v = names[-1]
                    pts[v][combo[-1]] = next(sources[v])
                    raise
                if al * ur != ar * ul:
                    where = ",".join(f"{v}={assign[v]}" for v in names)
                    diff = al * ur - ar * ul
                    if not exact:
                        diff = diff * invert(ul * ur)
                    return f"at {where or 'q'}: {diff}", len(list(itertools.product(*pts.values())))
            size = 1
            for v in names:
                size *= len(pts[v])
            return None, size
        except PoleError:
            continue
    raise RuntimeError("could not find a pole-free evaluation grid")


def _block_grid(lhs, rhs, ring, names, pts):
    """Cleared comparison on the same grid via block contraction, or None.

    Here the cleared difference itself is evaluated, so points where the
    merged denominator vanishes need not be avoided.
    """
    layout = joint_layout([lhs, rhs])
    got = cleared_grid([lhs, rhs], ring, layout.lengths, {v: [int(x) for x in pts[v]] for v in names})
    if got is None:
        return None
    (left, dl), (right, dr) = got
    size = len(left)
    for point in sorted(left, key=lambda p: [(abs(x), -x) for x in p]):
        a, b = left[point] * dr, right[point] * dl
        if a != b:
            where = ",".join(f"{v}={x}" for v, x in zip(names, point))
            return f"cleared difference at {where}: {(a - b) * invert(dl * dr)}", size
    return None, size


def _run(lhs, rhs, ring, strategy: str, exact: bool, variables) -> tuple[str, str | None, str | None]:
    """``(strategy used, residue, detail)``."""
    if strategy == "Clearing":
        return "Clearing", clearing(lhs, rhs, ring, exact), None
    if strategy == "PointEval":
        res, size = point_eval(lhs, rhs, ring, exact, variables)
        return "PointEval", res, f"grid={size}"
    try:
        return "Clearing", clearing(lhs, rhs, ring, exact), None
    except NotRegular as e:
        res, size = point_eval(lhs, rhs, ring, exact, variables)
        return "PointEval", res, f"fallback: {e}; grid={size}"


# -- public entry points ------------------------------------------------------------

def _report(claim, strategy, outcome, residue=None, t0=None, timings=False, detail=None):
    return VerificationReport(claim.name, claim.params, strategy, outcome, residue,
                              _ms(t0, timings) if t0 is not None else None, detail)


def _prepare(claim: CongruenceClaim, strategy: str, t0: float, timings: bool):
    """Sides, or an early report: build, then degeneracy, then side conditions."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    try:
        lhs, rhs = claim.sides
    except IntegralityViolation as e:
        return None, _report(claim, strategy, Outcome.HYPOTHESIS_FAIL, None, t0, timings, str(e))
    for side in (lhs, rhs):
        bad = degenerate_factor(side)
        if bad:
            return None, _report(claim, strategy, Outcome.NONINVERTIBLE, None, t0, timings, bad)
    if not claim.hypothesis.holds(claim.param_map):
        return None, _report(claim, strategy, Outcome.HYPOTHESIS_FAIL, None, t0, timings,
                             f"requires {claim.hypothesis.text}")
    return (lhs, rhs), None


def verify(claim: CongruenceClaim, strategy: str = "Auto", timings: bool = False) -> VerificationReport:
    """Decide ``claim`` exactly.  Side-condition violations are outcomes, not errors."""
    if isinstance(claim.modulus, ParametricA):
        return verify_parametric_a(claim, strategy, timings)
    t0 = time.perf_counter()
    sides, early = _prepare(claim, strategy, t0, timings)
    if early:
        return early
    lhs, rhs = sides
    mod = claim.modulus
    if isinstance(mod, PhiPower):
        ring, exact = cyclotomic_ring(mod.n, mod.power), False
    elif isinstance(mod, ExactIdentity):
        ring, exact = LAURENT, True
    else:
        raise TypeError(f"verify does not handle modulus {mod}")
    try:
        used, residue, detail = _run(lhs, rhs, ring, strategy, exact, claim.variables)
    except NotRegular as e:
        return _report(claim, strategy, Outcome.NONINVERTIBLE, None, t0, timings, str(e))
    except NonInvertible as e:
        return _report(claim, strategy, Outcome.NONINVERTIBLE, None, t0, timings, str(e))
    outcome = Outcome.PASS if residue is None else Outcome.FAIL
    return _report(claim, used, outcome, residue, t0, timings, detail)


def verify_parametric_a(claim: CongruenceClaim, strategy: str = "Clearing",
                        timings: bool = False) -> VerificationReport:
    """Exact equality of both sides at every zero ``a = q**e`` of the modulus."""
    mod = claim.modulus
    if not isinstance(mod, ParametricA):
        raise TypeError("verify_parametric_a needs a ParametricA modulus")
    t0 = time.perf_counter()
    sides, early = _prepare(claim, strategy, t0, timings)
    if early:
        return early
    if len(set(mod.zeros)) != len(mod.zeros) or mod.n < 1:
        raise ValueError("specialization points must be distinct (coprime linear factors)")
    lhs, rhs = sides
    residues, details, used = [], [], strategy
    try:
        for e in mod.zeros:
            l_e = substitute_qpower(lhs, "a", e)
            r_e = substitute_qpower(rhs, "a", e)
            used, res, det = _run(l_e, r_e, LAURENT, strategy, True, claim.variables - {"a"})
            if res is not None:
                residues.append(f"a=q^{e}: {res}")
            if det:
                details.append(f"a=q^{e}: {det}")
    except (NonInvertible, NotRegular) as e:
        return _report(claim, strategy, Outcome.NONINVERTIBLE, None, t0, timings, str(e))
    outcome = Outcome.FAIL if residues else Outcome.PASS
    return _report(claim, used, outcome, "; ".join(residues) or None, t0, timings,
                   "; ".join(details) or None)


# -- claim transformations -----------------------------------------------------------

def perturb(claim: CongruenceClaim, shift: int = 1) -> CongruenceClaim:
    """Negative control: the left side's per-term power ``q^(a k + b)`` becomes ``q^(a k + b + shift)``."""
    def build():
        lhs, rhs = claim.build()
        p = lhs.power
        return dataclasses.replace(lhs, power=Affine(p.a, p.b + shift)), rhs
    return dataclasses.replace(claim, name=f"{claim.name}~power{shift:+d}", build=build)


def with_modulus_power(claim: CongruenceClaim, power: int) -> CongruenceClaim:
    """Same sides, checked modulo ``Phi_n^power`` instead."""
    if not isinstance(claim.modulus, PhiPower):
        raise TypeError("only Phi_n-power claims can change their modulus power")
    params = dict(claim.params, power=power)
    return dataclasses.replace(claim, params=tuple(sorted(params.items())),
                               modulus=PhiPower(claim.modulus.n, power))


def check_specialization(source: CongruenceClaim, target: CongruenceClaim, variable: str,
                         qexp: int, coeff=1) -> VerificationReport:
    """Substitute ``variable = coeff*q**qexp`` into ``source`` and compare with ``target``
    term by term (both sides), modulo the target's modulus."""
    t0 = time.perf_counter()
    name = f"{source.name}[{variable}={'' if coeff == 1 else '-' if coeff == -1 else coeff}q^{qexp}]"
    mod = target.modulus
    ring = cyclotomic_ring(mod.n, mod.power)
    params = tuple(sorted(dict(source.params).items()))
    value = ring.qpow(qexp).scale(Fraction(coeff))
    try:
        pairs = list(zip(source.sides, target.sides))
    except IntegralityViolation as e:
        return VerificationReport(name, params, "Specialization", Outcome.HYPOTHESIS_FAIL, detail=str(e))
    for label, (s, t) in zip(("lhs", "rhs"), pairs):
        if s.top != t.top:
            return VerificationReport(name, params, "Specialization", Outcome.FAIL,
                                      detail=f"{label}: summation ranges differ")
        for k in range(s.top + 1):
            try:
                fs = summand(s, k, ring).evaluate({variable: value})
                ft = summand(t, k, ring)
            except NonInvertible as e:
                return VerificationReport(name, params, "Specialization", Outcome.NONINVERTIBLE,
                                          detail=f"{label} k={k}: {e}")
            for den in (fs.den, ft.den):
                if not (den.is_constant() and is_unit(den.constant_term())):
                    return VerificationReport(name, params, "Specialization", Outcome.NONINVERTIBLE,
                                              detail=f"{label} k={k}: denominator is not a unit")
            diff = fs.cross_difference(ft)
            if diff:
                return VerificationReport(name, params, "Specialization", Outcome.FAIL,
                                          diff.serialize(), _ms(t0, False), f"{label} k={k}")
    return VerificationReport(name, params, "Specialization", Outcome.PASS,
                              detail=f"term by term against {target.name}")


# -- scans ------------------------------------------------------------------------------

def threads() -> int:
    try:
        return max(1, int(os.environ.get("QCONGR_THREADS", "1")))
    except ValueError:
        return 1


def tuples(name: str, ranges: Mapping[str, Iterable[int]]) -> list[dict[str, int]]:
    """Parameter tuples in claim-parameter order, lexicographic."""
    keys = builtins.param_names(name)
    missing = [k for k in keys if k not in ranges]
    if missing:
        raise ValueError(f"scan of {name} needs ranges for {', '.join(missing)}")
    extra = [k for k in ranges if k not in keys and k != "power"]
    if extra:
        raise ValueError(f"{name} has no parameters {', '.join(extra)}")
    order = list(keys) + (["power"] if "power" in ranges else [])
    values = [sorted(set(ranges[k])) for k in order]
    return [dict(zip(order, combo)) for combo in itertools.product(*values)]


def scan(name: str, ranges: Mapping[str, Iterable[int]], strategy: str = "Auto",
         admissible_only: bool = False, timings: bool = False,
         workers: int | None = None) -> list[VerificationReport]:
    """One report per parameter tuple, in deterministic order.

    Inadmissible tuples are reported ``HYPOTHESIS_FAIL`` (or dropped with
    ``admissible_only``).
    """
    claims = []
    for params in tuples(name, ranges):
        try:
            claims.append(builtins.builtin(name, **params))
        except ValueError:
            continue
    if admissible_only:
        claims = [c for c in claims if c.hypothesis.holds(c.param_map)]

    return scan_claims(claims, strategy, timings, workers)


def scan_claims(claims: Sequence[CongruenceClaim], strategy: str = "Auto",
                timings: bool = False, workers: int | None = None) -> list[VerificationReport]:
    """Verify each claim; reports come back in input order whatever ``workers`` is."""
    def one(c):
        return verify(c, strategy, timings)

    workers = workers or threads()
    if workers > 1 and len(claims) > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(one, claims))
    return [one(c) for c in claims]
