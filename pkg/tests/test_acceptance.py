"""Acceptance criteria 1 to 13.

Every check is exact, so there are no tolerances.  Each test records one
``CRITERION k: PASS/FAIL`` line (see conftest.py) and then asserts the
verdict.  A criterion whose congruence does not hold in the requested range
fails here on purpose; the summary line says which instances fail.

Reports from criteria 1 to 7 are computed once per session with both
strategies and reused by criterion 12.
"""

import functools
import time

import pytest

from qcongr import dsl, padlim
from qcongr.claims import (
    Outcome,
    builtin,
    check_specialization,
    perturb,
    reports_to_json,
    verify,
    with_modulus_power,
)
from qcongr.claims.engine import scan_claims, tuples
from qcongr.claims.identities import CLOSED_FORMS, verify_identity

pytestmark = pytest.mark.acceptance


def admissible(name, keep=lambda p: True, **ranges):
    """Builtin claims over the grid whose side conditions hold."""
    out = []
    for params in tuples(name, ranges):
        if not keep(params):
            continue
        try:
            c = builtin(name, **params)
        except ValueError:
            continue
        if c.hypothesis.holds(c.param_map):
            out.append(c)
    return out


def both(claims):
    """``[(claim, clearing report, point-eval report)]``."""
    clear = scan_claims(claims, "Clearing")
    point = scan_claims(claims, "PointEval")
    return list(zip(claims, clear, point))


def tag(claim):
    return claim.name + "(" + ",".join(f"{k}={v}" for k, v in claim.params) + ")"


def tally(rows):
    """PASS count with both strategies, and the instances that are not."""
    good = [c for c, a, b in rows if a.passed and b.passed]
    bad = [tag(c) for c, a, b in rows if not (a.passed and b.passed)]
    return len(good), bad


def short(items, limit=6):
    if len(items) <= limit:
        return ", ".join(items)
    return ", ".join(items[:limit]) + f", ... ({len(items)} total)"


def verdict(rows, label):
    n_ok, bad = tally(rows)
    text = f"{label}: {n_ok}/{len(rows)} PASS with both strategies"
    if bad:
        text += "; not PASS: " + short(bad)
    return not bad, text


# -- shared, cached instance sets -----------------------------------------------------

@functools.cache
def c1_rows():
    return both(admissible("th-2", lambda p: p["n"] >= 5, d=range(2, 6), n=range(5, 46)))


@functools.cache
def c2_rows():
    return both(admissible("th-1", d=range(3, 6), n=range(1, 50)))


@functools.cache
def c3_rows():
    rows = {}
    rows["th-2-2"] = both(admissible("th-2-2", d=range(2, 7), n=range(3, 46)))
    rows["th-2-3"] = both(admissible("th-2-3", d=range(1, 6), n=range(1, 46)))
    rows["th-2-4"] = both(admissible("th-2-4", d=range(2, 7), n=range(3, 46)))
    rows["th-2-5"] = both(admissible("th-2-5", d=range(1, 6), n=range(1, 46)))
    return rows


@functools.cache
def c4_rows():
    return both(admissible("th-3", d=range(2, 6), s=(-1, 1), n=range(1, 46)))


@functools.cache
def c5_rows():
    return both(admissible("th-5", d=range(1, 5), n=range(1, 36)))


@functools.cache
def c6_rows():
    return (both(admissible("s-3", d=range(3, 6), s=(-1, 1), n=range(1, 46)))
            + both(admissible("s-3-1", n=range(1, 46))))


@functools.cache
def c7_rows():
    return both(admissible("ss-0", d=range(1, 4), n=range(1, 26)))


# -- criteria ----------------------------------------------------------------------------

def test_criterion_01_th2(record):
    t0 = time.perf_counter()
    rows = c1_rows()
    ok, text = verdict(rows, "th-2 mod Phi_n^2")
    record(1, ok, f"{text} [{time.perf_counter() - t0:.0f} s]")
    assert ok, text


def test_criterion_02_th1(record):
    ok, text = verdict(c2_rows(), "th-1 mod Phi_n^2")
    record(2, ok, text)
    assert ok, text


def test_criterion_03_th2_family(record):
    parts = [verdict(rows, name) for name, rows in c3_rows().items()]
    ok = all(p[0] for p in parts)
    text = "; ".join(p[1] for p in parts)
    record(3, ok, text)
    assert ok, text


def test_criterion_04_th3_and_sharpness(record):
    rows = c4_rows()
    ok, text = verdict(rows, "th-3 mod Phi_n")
    strong = scan_claims([with_modulus_power(c, 2) for c, _, _ in rows], "Clearing")
    fails = [r for r in strong if r.outcome is Outcome.FAIL]
    assert all(r.outcome in (Outcome.PASS, Outcome.FAIL) for r in strong)
    if fails:
        probe = f"sharpness: mod Phi_n^2 FAILs on {len(fails)}/{len(strong)} instances, modulus is sharp"
    else:
        probe = f"sharpness: mod Phi_n^2 holds on all {len(strong)} instances (finding)"
    record(4, ok, f"{text}; {probe}")
    assert ok, text


def test_criterion_05_th5(record):
    ok, text = verdict(c5_rows(), "th-5 in x and y")
    record(5, ok, text)
    assert ok, text


def test_criterion_06_lemma_specializations(record):
    ok, text = verdict(c6_rows(), "s-3 and s-3-1 at a = q^n, q^-n")
    record(6, ok, text)
    assert ok, text


def test_criterion_07_ss0(record):
    rows = c7_rows()
    ok, text = verdict(rows, "ss-0 in m, x, y")
    guard = {a.strategy for _, a, _ in rows}
    ok = ok and guard == {"Clearing"}
    record(7, ok, text)
    assert ok, text


def test_criterion_08_specialization(record):
    reports = []
    for n in (5, 9, 13, 17):
        src = builtin("th-2", d=2, n=n)
        reports.append(check_specialization(src, builtin("th-2-0", n=n), "x", 2))
        reports.append(check_specialization(src, builtin("th-2-1", n=n), "x", 2, coeff=-1))
    bad = [f"{r.claim} n={dict(r.params)['n']}" for r in reports if not r.passed]
    ok = not bad
    text = f"x -> q^2 and x -> -q^2: {len(reports) - len(bad)}/{len(reports)} PASS"
    if bad:
        text += "; not PASS: " + short(bad)
    record(8, ok, text)
    assert ok, text


def test_criterion_09_padic(record):
    t0 = time.perf_counter()
    reports = padlim.limit_suite()
    elapsed = time.perf_counter() - t0
    groups = {}
    for r in reports:
        groups.setdefault(r.claim, []).append(r)
    parts = []
    for name, rs in groups.items():
        bad = [str(dict(r.params)["p"]) for r in rs if not r.passed]
        part = f"{name} {len(rs) - len(bad)}/{len(rs)}"
        if bad:
            part += " (FAIL p=" + ",".join(sorted(set(bad), key=int)) + ")"
        parts.append(part)
    ok = all(r.passed for r in reports) and elapsed < 30
    text = "; ".join(parts) + f" [{elapsed:.1f} s]"
    record(9, ok, text)
    assert ok, text


def test_criterion_10_identities(record):
    reports = [verify_identity("ss-0-0", n=n) for n in range(0, 9)]
    reports += [verify_identity("ss-0-3", n=n) for n in range(0, 7)]
    small_grid = [r for r in reports if int(r.detail.split("=")[1]) < 20]
    reports += [verify_identity(name, samples=200, seed=0) for name in ("s-1", "s-2")]
    closed = []
    for name in CLOSED_FORMS:
        closed += admissible(name, d=range(1, 7), n=range(3, 46))
    closed_reports = scan_claims(closed)
    bad = [f"{r.claim}({r.detail})" for r in reports if not r.passed]
    bad += [tag(c) for c, r in zip(closed, closed_reports) if not r.passed]
    ok = not bad and not small_grid
    text = (f"{len(reports)} grid/random checks, {len(closed_reports)} closed-form instances; "
            f"{len(bad)} not PASS")
    if bad:
        text += ": " + short(bad)
    record(10, ok, text)
    assert ok, text


def test_criterion_11_negative_controls(record):
    checks = []
    r = verify(perturb(builtin("th-2", d=2, n=5)))
    checks.append(("perturbed power FAILs", r.outcome is Outcome.FAIL))
    weak = scan_claims([with_modulus_power(c, 1) for c, _, _ in c1_rows()])
    checks.append((f"th-2 mod Phi_n PASSes on {sum(w.passed for w in weak)}/{len(weak)}",
                   all(w.passed for w in weak)))
    degenerate = [verify(builtin("s-3", d=2, s=-1, n=n), s) for n in (3, 7, 11)
                  for s in ("Clearing", "PointEval")]
    checks.append(("s-3 d=2 s=-1 is NONINVERTIBLE",
                   all(r.outcome is Outcome.NONINVERTIBLE for r in degenerate)))
    ok = all(c for _, c in checks)
    text = "; ".join(f"{label}: {'yes' if c else 'NO'}" for label, c in checks)
    record(11, ok, text)
    assert ok, text


def test_criterion_12_self_consistency(record):
    rows = c1_rows() + c2_rows() + sum(c3_rows().values(), []) + c4_rows() \
        + c5_rows() + c6_rows() + c7_rows()
    disagree = [tag(c) for c, a, b in rows if a.outcome is not b.outcome]
    mismatched = []
    for claim, a, b in c1_rows():
        lowered = dsl.shipped_claim(claim.name, **claim.param_map)
        for strategy, want in (("Clearing", a), ("PointEval", b)):
            if reports_to_json([verify(lowered, strategy)]) != reports_to_json([want]):
                mismatched.append(f"{tag(claim)}/{strategy}")
    ok = not disagree and not mismatched
    text = (f"strategy agreement on {len(rows) - len(disagree)}/{len(rows)} instances; "
            f"DSL reports byte-identical on {2 * len(c1_rows()) - len(mismatched)}/"
            f"{2 * len(c1_rows())}")
    if disagree or mismatched:
        text += "; differing: " + short(disagree + mismatched)
    record(12, ok, text)
    assert ok, text


def test_criterion_13_in2_finding(record):
    rows = both(admissible("in-2", n=range(1, 30)))
    consistent = all(a.outcome is b.outcome for _, a, b in rows)
    status = {dict(c.params)["n"]: a.outcome.value for c, a, _ in rows}
    finding = " ".join(f"{n}:{'P' if v == 'PASS' else 'F'}" for n, v in sorted(status.items()))
    ok = consistent and set(status) == set(range(1, 30, 2))
    text = f"in-2 as stated, per odd n (P=PASS, F=FAIL), strategies agree={consistent}: {finding}"
    record(13, ok, text)
    assert ok, text
