import json

import pytest

from qcongr.claims import (
    Outcome,
    builtin,
    check_specialization,
    perturb,
    reports_to_csv,
    reports_to_json,
    scan,
    verify,
    with_modulus_power,
)
from qcongr.claims.engine import scan_claims

from oracle import difference_valuation


@pytest.mark.parametrize("strategy", ["Clearing", "PointEval"])
@pytest.mark.parametrize("name,params", [
    ("th-2", dict(d=2, n=5)),
    ("th-3", dict(d=2, s=-1, n=7)),
    ("th-5", dict(d=1, n=5)),
    ("s-3", dict(d=3, s=1, n=7)),
    ("ss-0", dict(d=1, n=5)),
])
def test_small_instances_pass(name, params, strategy):
    r = verify(builtin(name, **params), strategy)
    assert r.outcome is Outcome.PASS, r.pretty()
    assert r.strategy == strategy


def test_perturbed_power_fails_both_ways():
    bad = perturb(builtin("th-2", d=2, n=5))
    for strategy in ("Clearing", "PointEval"):
        r = verify(bad, strategy)
        assert r.outcome is Outcome.FAIL and r.residue


def test_weaker_modulus_still_passes():
    c = with_modulus_power(builtin("th-2", d=2, n=9), 1)
    assert verify(c).passed
    assert dict(c.params)["power"] == 1


def test_typed_outcomes():
    r = verify(builtin("s-3", d=2, s=-1, n=3))
    assert r.outcome is Outcome.NONINVERTIBLE
    r = verify(builtin("th-2", d=2, n=7))
    assert r.outcome is Outcome.HYPOTHESIS_FAIL and r.detail.startswith("requires")
    # an exponent is not even an integer here
    r = verify(builtin("th-2-2", d=2, n=4))
    assert r.outcome is Outcome.HYPOTHESIS_FAIL and "is not an integer" in r.detail
    with pytest.raises(ValueError):
        verify(builtin("th-2", d=2, n=5), "Guess")


@pytest.mark.parametrize("d,n,expected", [(2, 5, 2), (2, 9, 2), (3, 7, 1), (4, 9, 1)])
def test_engine_agrees_with_oracle(d, n, expected):
    """Valuation of LHS - RHS at x = 2 decides the Phi_n^2 claim independently."""
    claim = builtin("th-2", d=d, n=n)
    v = difference_valuation(claim.lhs, claim.rhs, n, {"x": 2})
    assert min(v, 2) == expected
    assert verify(claim).passed == (v >= 2)


def test_specialization():
    r = check_specialization(builtin("th-2", d=2, n=9), builtin("th-2-0", n=9), "x", 2)
    assert r.passed
    r = check_specialization(builtin("th-2", d=2, n=9), builtin("th-2-0", n=9), "x", 2, coeff=-1)
    assert r.outcome is Outcome.FAIL


def test_scan_order_and_serial_parallel():
    ranges = {"d": [3, 2], "n": range(5, 14)}
    serial = scan("th-2", ranges, "Clearing", workers=1)
    parallel = scan("th-2", ranges, "Clearing", workers=4)
    assert reports_to_json(serial) == reports_to_json(parallel)
    assert [r.params for r in serial] == sorted(r.params for r in serial)
    adm = scan("th-2", ranges, admissible_only=True)
    assert {dict(r.params)["n"] for r in adm} == {5, 9, 13, 7}


def test_report_serialization():
    reports = scan_claims([builtin("th-2", d=2, n=5), builtin("th-2", d=3, n=7)])
    lines = reports_to_json(reports).splitlines()
    assert [json.loads(x)["outcome"] for x in lines] == ["PASS", "FAIL"]
    assert json.loads(lines[0])["millis"] is None
    assert reports_to_json(reports) == reports_to_json(scan_claims(
        [builtin("th-2", d=2, n=5), builtin("th-2", d=3, n=7)]))
    csv = reports_to_csv(reports).splitlines()
    assert csv[0].startswith("claim,params,strategy,outcome")
    assert csv[1].startswith("th-2,d=2;n=5,")
    assert "truncated" in verify(builtin("th-2", d=3, n=13)).pretty(width=10)
