import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcongr import dsl
from qcongr.claims import builtin, names, reports_to_json, verify
from qcongr.qseries import IntegralityViolation

TH23 = ("claim th23 params d,n: sum k=0..(n-1)/(2d) of poch(q; q^(2d))_k "
        "/ poch(q^(2d); q^(2d))_k * q^(2*d*k) ≡ 0 mod Phi(n)^1")


def test_parse_example():
    ast = dsl.parse(TH23)
    assert ast.name == "th23" and ast.params == ("d", "n")
    assert isinstance(ast.lhs, dsl.Sum)
    assert dsl.show_expr(ast.lhs.upper) == "(n-1)/(2*d)"
    assert isinstance(ast.modulus, dsl.PhiMod)


def test_lowered_example_matches_builtin():
    for d, n in [(1, 3), (2, 9), (3, 13)]:
        a = dsl.lower(dsl.parse(TH23), {"d": d, "n": n})
        b = builtin("th-2-3", d=d, n=n)
        assert a.sides == b.sides
        assert a.modulus == b.modulus
        ra, rb = verify(a), verify(b)
        assert dataclasses.replace(ra, claim=rb.claim) == rb


def test_syntax_error_position():
    with pytest.raises(dsl.ParseError) as info:
        dsl.parse("claim bad : sum of")
    err = info.value
    assert (err.line, err.col) == (1, 17)
    assert "range" in err.expected
    assert err.render().startswith("<inline>:1:17: ")


@pytest.mark.parametrize("text,kind", [
    ("claim c : q $ 1", dsl.LexError),
    ("claim c params n : sum k=0..n of q^k ~= 0 mod Phi(d)^1", dsl.UnboundName),
    ("claim c params n, n : 1 ~= 1 mod Phi(n)^1", dsl.ParseError),
    ("claim c params n : 1 ~= 1 mod", dsl.ParseError),
])
def test_diagnostics(text, kind):
    with pytest.raises(kind) as info:
        dsl.parse(dsl.ClaimSource(text, "t.qcl"))
    assert info.value.render().startswith("t.qcl:1:")


def test_integrality_is_checked_on_lowering():
    ast = dsl.parse(TH23)
    with pytest.raises(IntegralityViolation, match="with d=2, n=4"):
        dsl.lower(ast, {"d": 2, "n": 4})
    lazy = dsl.lower(ast, {"d": 2, "n": 4}, strict=False)
    assert verify(lazy).outcome.value == "HYPOTHESIS_FAIL"


def test_parameter_errors():
    ast = dsl.parse(TH23)
    with pytest.raises(dsl.LowerError):
        dsl.lower(ast, {"d": 2})
    with pytest.raises(dsl.LowerError):
        dsl.lower(ast, {"d": 2, "n": 5, "s": 1})
    with pytest.raises(dsl.LowerError):
        dsl.lower(ast, {"d": 2, "n": "5"})


def test_shipped_claims_cover_the_builtins():
    assert set(dsl.shipped()) == set(names())


@pytest.mark.parametrize("name", sorted(names()))
def test_pretty_round_trip(name):
    ast = dsl.shipped()[name]
    text = dsl.pretty(ast)
    again = dsl.parse(text)
    assert again == ast
    assert dsl.pretty(again) == text


@pytest.mark.parametrize("name,params", [
    ("th-2", dict(d=2, n=9)), ("th-2", dict(d=3, n=7)), ("th-3", dict(d=2, s=-1, n=11)),
    ("s-3", dict(d=2, s=-1, n=3)), ("in-2", dict(n=7)), ("ss-0-2", dict(d=2, n=5)),
])
def test_lowered_reports_are_byte_identical(name, params):
    a = dsl.shipped_claim(name, **params)
    b = builtin(name, **params)
    assert reports_to_json([verify(a)]) == reports_to_json([verify(b)])


def test_conditions_and_expressions():
    ast = dsl.parse('claim c params d, s, n require d >= 3 and s in {-1, 1} '
                    'and n == s mod (2*d) : 1 ~= 1 mod Phi(n)^1')
    env = {"d": 3, "s": -1, "n": 11}
    assert dsl.eval_cond(ast.require, env)
    assert not dsl.eval_cond(ast.require, dict(env, n=13))
    e = dsl.parse("claim c params n : q^((n-1)^2/4) ~= 1 mod Phi(n)^1").lhs.exp
    assert dsl.eval_int(e, {"n": 5}) == 4


ALPHABET = st.sampled_from(list("claimsupoch qPhi()^_;:,.=~+-*/0123456789nkdx{}\"\n") +
                           ["claim", "sum", "of", "mod", "poch", "params", " ", "..", "≡"])


@settings(max_examples=300, deadline=None)
@given(st.lists(ALPHABET, max_size=40).map("".join))
def test_parser_is_total(text):
    """Garbage never escapes as anything but a positioned diagnostic."""
    try:
        dsl.parse_module(text)
    except dsl.DslError as e:
        assert e.line >= 1 and e.col >= 1
