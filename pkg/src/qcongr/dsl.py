"""A small claim language for truncated q-hypergeometric congruences.

Example::

    # sum of (q;q^(2d))_k / (q^(2d);q^(2d))_k q^(2dk) vanishes mod Phi_n
    claim "th-2-3" params d, n
      require d >= 1 and n > 1 and n == 1 mod 2 and n == 1 mod (2*d)
        as "d >= 1, n > 1 odd, n = 1 (mod 2d)"
    : sum k=0..(n-1)/(2*d) of poch(q; q^(2*d))_k / poch(q^(2*d); q^(2*d))_k * q^(2*d*k)
      ~= 0 mod Phi(n)^1

Grammar (``|`` alternatives, ``?`` optional, ``*`` repetition)::

    module   := claim*
    claim    := "claim" (IDENT | STRING) ("params" IDENT ("," IDENT)*)?
                ("require" cond ("as" STRING)?)? ("note" STRING)?
                ":" side (("~=" | "≡") side "mod" modulus | "=" side)
    side     := "sum" IDENT "=" expr ".." expr "of" term
              | "if" cond "then" side "else" side
              | term
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | factor
    factor   := "poch" "(" term ";" "q" "^" prim ")" "_" prim
              | "q" ("^" prim)? | VAR ("^" iprim)? | INT
              | "[" expr "]" "_" "q" | "(" term ")" ("^" prim)?
    modulus  := "Phi" "(" expr ")" "^" prim
              | "(" "1" "-" "a" "*" "q" "^" prim ")" ("(" "a" "-" "q" "^" prim ")")?
              | prim "^" prim
    cond     := conj ("or" conj)* ;  conj := neg ("and" neg)*
    neg      := "not" neg | "(" cond ")" | expr CMP expr ("mod" prim)?
              | expr "in" "{" expr ("," expr)* "}"
    expr     := integer expressions over the parameters (and the summation
                index) with + - * / ^; every "/" is an exact division and
                an integer literal followed by a name or "(" multiplies.

``VAR`` is one of the symbolic variables x, y, a, m.  A parenthesised term
may only be raised to a power when it is ``(-1)``.  ``~=`` is the ASCII
spelling of ``≡``; ``Phi`` stands for the cyclotomic polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Mapping, Sequence

from .claims.model import (
    CongruenceClaim,
    ExactIdentity,
    Hypothesis,
    ParametricA,
    PhiPower,
    PrimePower,
    make_params,
)
from .multipoly import ONE, VARIABLES, var_index
from .qseries import (
    Affine,
    IntegralityViolation,
    PochSpec,
    QAtom,
    SeriesSpec,
    closed_form_series,
    exact_quotient,
)

KEYWORDS = {"claim", "params", "require", "as", "note", "sum", "of", "mod", "and", "or",
            "not", "in", "if", "then", "else", "poch", "Phi", "q"}
CMP_OPS = ("==", "!=", "<=", ">=", "<", ">")


# -- diagnostics ----------------------------------------------------------------------

class DslError(Exception):
    """A diagnostic with a 1-based position."""

    kind = "error"

    def __init__(self, message: str, line: int = 0, col: int = 0, expected: Sequence[str] = (),
                 origin: str = "<inline>"):
        self.message, self.line, self.col = message, line, col
        self.expected = tuple(sorted(set(expected)))
        self.origin = origin
        super().__init__(self.render())

    def render(self) -> str:
        out = f"{self.origin}:{self.line}:{self.col}: {self.kind}: {self.message}"
        if self.expected:
            out += f" (expected {', '.join(self.expected)})"
        return out


class LexError(DslError):
    kind = "lexical error"


class ParseError(DslError):
    kind = "syntax error"


class UnboundName(DslError):
    kind = "unbound name"


class LowerError(ValueError):
    """Parameters do not fit the claim (missing, extra, or non-integral)."""


# -- source and tokens -------------------------------------------------------------

@dataclass(frozen=True)
class ClaimSource:
    text: str
    origin: str = "<inline>"


@dataclass(frozen=True)
class Token:
    kind: str       # INT, IDENT, STRING, KW, OP, EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<op>\.\.|==|!=|<=|>=|~=|≡|[-+*/^_()\[\]{};,:=<>])
""", re.VERBOSE)


def tokenize(source: ClaimSource) -> list[Token]:
    text, out = source.text, []
    pos, line, start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - start + 1
        if not m:
            ch = text[pos]
            if ch == '"':
                raise LexError("unterminated string", line, col, origin=source.origin)
            raise LexError(f"unexpected character {ch!r}", line, col, origin=source.origin)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind == "int":
            out.append(Token("INT", s, line, col))
        elif kind == "ident":
            out.append(Token("KW" if s in KEYWORDS else "IDENT", s, line, col))
        elif kind == "string":
            out.append(Token("STRING", s[1:-1], line, col))
        elif kind == "op":
            out.append(Token("OP", "~=" if s == "≡" else s, line, col))
        pos = m.end()
    out.append(Token("EOF", "", line, pos - start + 1))
    return out


# -- AST ---------------------------------------------------------------------------------
# Integer expressions

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class BinOp:
    op: str         # + - *
    left: object
    right: object


@dataclass(frozen=True)
class ExactDiv:
    """``left / right``, asserted to be an integer when evaluated."""
    left: object
    right: object


@dataclass(frozen=True)
class IntPow:
    base: object
    exp: int


@dataclass(frozen=True)
class IntNeg:
    operand: object


# Conditions

@dataclass(frozen=True)
class Compare:
    op: str
    left: object
    right: object
    modulus: object = None      # "left == right mod m"


@dataclass(frozen=True)
class InSet:
    expr: object
    values: tuple


@dataclass(frozen=True)
class BoolOp:
    op: str         # and / or
    left: object
    right: object


@dataclass(frozen=True)
class Not:
    operand: object


# Terms

@dataclass(frozen=True)
class Poch:
    atom: object
    step: object
    length: object


@dataclass(frozen=True)
class QPow:
    exp: object     # None for plain q


@dataclass(frozen=True)
class Var:
    name: str
    power: int = 1


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class QInt:
    """``[n]_q``."""
    arg: object


@dataclass(frozen=True)
class SignPow:
    """``(-1)^e``."""
    exp: object


@dataclass(frozen=True)
class Product:
    left: object
    right: object


@dataclass(frozen=True)
class Quotient:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Group:
    """Explicit parentheses, kept so printing is faithful."""
    inner: object


@dataclass(frozen=True)
class Sum:
    var: str
    lower: object
    upper: object
    body: object


@dataclass(frozen=True)
class Cases:
    cond: object
    then: object
    other: object


# Moduli

@dataclass(frozen=True)
class PhiMod:
    n: object
    power: object


@dataclass(frozen=True)
class ParamMod:
    n: object
    both: bool      # (1-aq^n)(a-q^n) when True, (1-aq^n) otherwise


@dataclass(frozen=True)
class PrimeMod:
    p: object
    e: object


@dataclass(frozen=True)
class ExactMod:
    pass


@dataclass(frozen=True)
class ClaimAst:
    name: str
    params: tuple
    require: object
    require_text: str | None
    note: str | None
    lhs: object
    rhs: object
    modulus: object


# -- parser --------------------------------------------------------------------------

class _Parser:
    def __init__(self, source: ClaimSource):
        self.origin = source.origin
        self.toks = tokenize(source)
        self.i = 0
        self.scope: set[str] = set()

    # token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        if kind in ("KW", "OP"):
            return t.kind == kind and t.text == text
        return t.kind == kind

    def error(self, message: str, expected: Sequence[str] = (), tok: Token | None = None):
        t = tok or self.tok
        return ParseError(message, t.line, t.col, expected, self.origin)

    def _found(self) -> str:
        t = self.tok
        return "end of input" if t.kind == "EOF" else repr(t.text)

    def expect(self, kind: str, text: str | None = None) -> Token:
        if self.at(kind, text):
            t = self.tok
            self.i += 1
            return t
        want = repr(text) if text else kind
        raise self.error(f"unexpected {self._found()}", [want])

    def accept(self, kind: str, text: str | None = None) -> bool:
        if self.at(kind, text):
            self.i += 1
            return True
        return False

    # module / claim
    def module(self) -> list[ClaimAst]:
        out = []
        while not self.at("EOF"):
            out.append(self.claim())
        return out

    def claim(self) -> ClaimAst:
        self.expect("KW", "claim")
        if self.at("STRING") or self.at("IDENT"):
            name = self.tok.text
            self.i += 1
        else:
            raise self.error(f"unexpected {self._found()}", ["IDENT", "STRING"])
        if not name:
            raise self.error("empty claim name", tok=self.toks[self.i - 1])
        params = []
        if self.accept("KW", "params"):
            params.append(self._param())
            while self.accept("OP", ","):
                params.append(self._param())
            dup = {p for p in params if params.count(p) > 1}
            if dup:
                raise self.error(f"parameter {sorted(dup)[0]!r} declared twice",
                                 tok=self.toks[self.i - 1])
        self.scope = set(params)
        require = require_text = note = None
        if self.accept("KW", "require"):
            require = self.cond()
            if self.accept("KW", "as"):
                require_text = self.expect("STRING").text
        if self.accept("KW", "note"):
            note = self.expect("STRING").text
        self.expect("OP", ":")
        lhs = self.side()
        if self.accept("OP", "="):
            rhs, modulus = self.side(), ExactMod()
        elif self.accept("OP", "~="):
            rhs = self.side()
            self.expect("KW", "mod")
            modulus = self.modulus()
        else:
            raise self.error(f"unexpected {self._found()}", ["'~='", "'≡'", "'='", "'*'", "'/'"])
        self.scope = set()
        return ClaimAst(name, tuple(params), require, require_text, note, lhs, rhs, modulus)

    def _param(self) -> str:
        t = self.expect("IDENT")
        if t.text in VARIABLES or t.text == "k":
            raise self.error(f"{t.text!r} is reserved and cannot be a parameter", tok=t)
        return t.text

    # sides and terms
    def side(self):
        if self.accept("KW", "sum"):
            if not self.at("IDENT"):
                raise self.error(f"unexpected {self._found()}", ["range"])
            var = self.expect("IDENT")
            if var.text in self.scope or var.text in VARIABLES:
                raise self.error(f"summation index {var.text!r} shadows a name", tok=var)
            self.expect("OP", "=")
            lower = self.expr()
            self.expect("OP", "..")
            upper = self.expr()
            self.expect("KW", "of")
            self.scope.add(var.text)
            try:
                body = self.term()
            finally:
                self.scope.discard(var.text)
            return Sum(var.text, lower, upper, body)
        if self.accept("KW", "if"):
            c = self.cond()
            self.expect("KW", "then")
            a = self.side()
            self.expect("KW", "else")
            return Cases(c, a, self.side())
        return self.term()

    def term(self):
        left = self.unary()
        while True:
            if self.accept("OP", "*"):
                left = Product(left, self.unary())
            elif self.accept("OP", "/"):
                left = Quotient(left, self.unary())
            else:
                return left

    def unary(self):
        if self.accept("OP", "-"):
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        t = self.tok
        if self.accept("KW", "poch"):
            self.expect("OP", "(")
            atom = self.term()
            self.expect("OP", ";")
            self.expect("KW", "q")
            self.expect("OP", "^")
            step = self.prim()
            self.expect("OP", ")")
            self.expect("OP", "_")
            return Poch(atom, step, self.prim())
        if self.accept("KW", "q"):
            return QPow(self.prim() if self.accept("OP", "^") else None)
        if t.kind == "IDENT" and t.text in VARIABLES:
            self.i += 1
            if self.accept("OP", "^"):
                return Var(t.text, self._small_int())
            return Var(t.text)
        if t.kind == "INT":
            self.i += 1
            return Const(int(t.text))
        if self.accept("OP", "["):
            arg = self.expr()
            self.expect("OP", "]")
            self.expect("OP", "_")
            self.expect("KW", "q")
            return QInt(arg)
        if self.accept("OP", "("):
            inner = self.term()
            self.expect("OP", ")")
            if self.accept("OP", "^"):
                if inner != Neg(Const(1)):
                    raise self.error("only (-1) may be raised to a power in a term", tok=t)
                return SignPow(self.prim())
            return Group(inner)
        if t.kind == "IDENT":
            raise UnboundName(f"{t.text!r} is not a variable here", t.line, t.col,
                              origin=self.origin)
        raise self.error(f"unexpected {self._found()}",
                         ["'poch'", "'q'", "VAR", "INT", "'['", "'('", "'-'"])

    def _small_int(self) -> int:
        neg = False
        if self.accept("OP", "("):
            neg = self.accept("OP", "-")
            v = int(self.expect("INT").text)
            self.expect("OP", ")")
        else:
            neg = self.accept("OP", "-")
            v = int(self.expect("INT").text)
        return -v if neg else v

    # moduli
    def modulus(self):
        if self.accept("KW", "Phi"):
            self.expect("OP", "(")
            n = self.expr()
            self.expect("OP", ")")
            self.expect("OP", "^")
            return PhiMod(n, self.prim())
        if self.at("OP", "(") and self.toks[self.i + 1].kind == "INT" \
                and self.toks[self.i + 1].text == "1":
            self.i += 2
            self.expect("OP", "-")
            self._var_a()
            self.expect("OP", "*")
            self.expect("KW", "q")
            self.expect("OP", "^")
            n = self.prim()
            self.expect("OP", ")")
            if not self.accept("OP", "("):
                return ParamMod(n, False)
            self._var_a()
            self.expect("OP", "-")
            self.expect("KW", "q")
            self.expect("OP", "^")
            n2 = self.prim()
            tok = self.tok
            self.expect("OP", ")")
            if n2 != n:
                raise self.error("both factors of the modulus must use the same exponent", tok=tok)
            return ParamMod(n, True)
        p = self.prim()
        self.expect("OP", "^")
        return PrimeMod(p, self.prim())

    def _var_a(self):
        t = self.tok
        if t.kind == "IDENT" and t.text == "a":
            self.i += 1
            return
        raise self.error(f"unexpected {self._found()}", ["'a'"])

    # conditions
    def cond(self):
        left = self.conj()
        while self.accept("KW", "or"):
            left = BoolOp("or", left, self.conj())
        return left

    def conj(self):
        left = self.neg()
        while self.accept("KW", "and"):
            left = BoolOp("and", left, self.neg())
        return left

    def neg(self):
        if self.accept("KW", "not"):
            return Not(self.neg())
        if self.at("OP", "(") and self._paren_is_cond():
            self.i += 1
            c = self.cond()
            self.expect("OP", ")")
            return c
        left = self.expr()
        if self.accept("KW", "in"):
            self.expect("OP", "{")
            vals = [self.expr()]
            while self.accept("OP", ","):
                vals.append(self.expr())
            self.expect("OP", "}")
            return InSet(left, tuple(vals))
        for op in CMP_OPS:
            if self.accept("OP", op):
                right = self.expr()
                m = self.prim() if self.accept("KW", "mod") else None
                return Compare(op, left, right, m)
        raise self.error(f"unexpected {self._found()}", [repr(o) for o in CMP_OPS] + ["'in'"])

    def _paren_is_cond(self) -> bool:
        """Look ahead inside a parenthesis for a comparison or boolean keyword."""
        depth = 0
        for t in self.toks[self.i:]:
            if t.kind == "OP" and t.text == "(":
                depth += 1
            elif t.kind == "OP" and t.text == ")":
                depth -= 1
                if depth == 0:
                    return False
            elif depth == 1 and ((t.kind == "OP" and t.text in CMP_OPS) or
                                 (t.kind == "KW" and t.text in ("and", "or", "not", "in"))):
                return True
            elif t.kind == "EOF":
                return False
        return False

    # integer expressions
    def expr(self):
        left = self.mul()
        while True:
            if self.accept("OP", "+"):
                left = BinOp("+", left, self.mul())
            elif self.accept("OP", "-"):
                left = BinOp("-", left, self.mul())
            else:
                return left

    def mul(self):
        left = self.ineg()
        while True:
            if isinstance(left, Num) and self._juxtaposed():
                left = BinOp("*", left, self.ineg())     # 2d, 2(n+1)
            elif self.accept("OP", "*"):
                left = BinOp("*", left, self.ineg())
            elif self.accept("OP", "/"):
                left = ExactDiv(left, self.ineg())
            else:
                return left

    def _juxtaposed(self) -> bool:
        t = self.tok
        return (t.kind == "IDENT" and t.text in self.scope) or (t.kind == "OP" and t.text == "(")

    def ineg(self):
        if self.accept("OP", "-"):
            return IntNeg(self.ineg())
        base = self.prim()
        if self.accept("OP", "^"):
            return IntPow(base, self._small_int())
        return base

    def prim(self):
        t = self.tok
        if t.kind == "INT":
            self.i += 1
            return Num(int(t.text))
        if t.kind == "IDENT":
            if t.text not in self.scope:
                raise UnboundName(f"{t.text!r} is not a declared parameter", t.line, t.col,
                                  origin=self.origin)
            self.i += 1
            return Name(t.text)
        if self.accept("OP", "("):
            e = self.expr()
            self.expect("OP", ")")
            return e
        raise self.error(f"unexpected {self._found()}", ["INT", "IDENT", "'('"])


def parse_module(source: ClaimSource | str) -> list[ClaimAst]:
    """Every claim in ``source``; raises :class:`DslError` with a position."""
    if isinstance(source, str):
        source = ClaimSource(source)
    return _Parser(source).module()


def parse(source: ClaimSource | str) -> ClaimAst:
    """The single claim in ``source``."""
    if isinstance(source, str):
        source = ClaimSource(source)
    claims = parse_module(source)
    if len(claims) != 1:
        raise ParseError(f"expected exactly one claim, found {len(claims)}", 1, 1,
                         origin=source.origin)
    return claims[0]


# -- pretty printer ----------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _iprec(e) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, ExactDiv):
        return 2
    if isinstance(e, IntNeg):
        return 3
    if isinstance(e, IntPow):
        return 4
    return 5


def show_expr(e) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Name):
        return e.id
    if isinstance(e, IntNeg):
        inner = show_expr(e.operand)
        return "-" + (inner if _iprec(e.operand) >= 4 else f"({inner})")
    if isinstance(e, IntPow):
        b = show_expr(e.base)
        b = b if _iprec(e.base) == 5 else f"({b})"
        return f"{b}^{e.exp}" if e.exp >= 0 else f"{b}^({e.exp})"
    op, p = ("/", 2) if isinstance(e, ExactDiv) else (e.op, _PREC[e.op])
    left = show_expr(e.left)
    if _iprec(e.left) < p:
        left = f"({left})"
    right = show_expr(e.right)
    if _iprec(e.right) <= p:
        right = f"({right})"
    return f"{left}{op}{right}"


def _show_prim(e) -> str:
    s = show_expr(e)
    return s if _iprec(e) == 5 else f"({s})"


def show_cond(c) -> str:
    if isinstance(c, Compare):
        s = f"{show_expr(c.left)} {c.op} {show_expr(c.right)}"
        return s + (f" mod {_show_prim(c.modulus)}" if c.modulus is not None else "")
    if isinstance(c, InSet):
        return f"{show_expr(c.expr)} in {{{', '.join(show_expr(v) for v in c.values)}}}"
    if isinstance(c, Not):
        inner = show_cond(c.operand)
        return f"not {inner}" if isinstance(c.operand, (Compare, InSet, Not)) else f"not ({inner})"
    left, right = show_cond(c.left), show_cond(c.right)
    if isinstance(c.left, BoolOp) and c.left.op != c.op:
        left = f"({left})"
    if isinstance(c.right, BoolOp):
        right = f"({right})"
    return f"{left} {c.op} {right}"


def _tprec(t) -> int:
    if isinstance(t, (Product, Quotient)):
        return 2
    if isinstance(t, Neg):
        return 3
    return 5


def show_term(t) -> str:
    if isinstance(t, Poch):
        return f"poch({show_term(t.atom)}; q^{_show_prim(t.step)})_{_show_prim(t.length)}"
    if isinstance(t, QPow):
        return "q" if t.exp is None else f"q^{_show_prim(t.exp)}"
    if isinstance(t, Var):
        if t.power == 1:
            return t.name
        return f"{t.name}^{t.power}" if t.power > 0 else f"{t.name}^({t.power})"
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, QInt):
        return f"[{show_expr(t.arg)}]_q"
    if isinstance(t, SignPow):
        return f"(-1)^{_show_prim(t.exp)}"
    if isinstance(t, Group):
        return f"({show_term(t.inner)})"
    if isinstance(t, Neg):
        inner = show_term(t.operand)
        return "-" + (inner if _tprec(t.operand) >= 3 else f"({inner})")
    op = " * " if isinstance(t, Product) else " / "
    left = show_term(t.left)
    right = show_term(t.right)
    if _tprec(t.right) <= 2:        # never produced by the parser, kept for safety
        right = f"({right})"
    return f"{left}{op}{right}"


def show_side(s) -> str:
    if isinstance(s, Sum):
        return f"sum {s.var}={show_expr(s.lower)}..{show_expr(s.upper)} of {show_term(s.body)}"
    if isinstance(s, Cases):
        return f"if {show_cond(s.cond)} then {show_side(s.then)} else {show_side(s.other)}"
    return show_term(s)


def show_modulus(m) -> str:
    if isinstance(m, PhiMod):
        return f"Phi({show_expr(m.n)})^{_show_prim(m.power)}"
    if isinstance(m, ParamMod):
        n = _show_prim(m.n)
        return f"(1-a*q^{n})(a-q^{n})" if m.both else f"(1-a*q^{n})"
    if isinstance(m, PrimeMod):
        return f"{_show_prim(m.p)}^{_show_prim(m.e)}"
    return "exact"


def _quote(s: str) -> str:
    if '"' in s or "\n" in s:
        raise ValueError("strings cannot contain quotes or newlines")
    return f'"{s}"'


def pretty(ast: ClaimAst) -> str:
    """Canonical text; ``parse(pretty(a)) == a``."""
    name = ast.name if re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", ast.name) and \
        ast.name not in KEYWORDS else _quote(ast.name)
    lines = [f"claim {name} params {', '.join(ast.params)}"]
    if ast.require is not None:
        lines.append(f"  require {show_cond(ast.require)}")
        if ast.require_text is not None:
            lines.append(f"    as {_quote(ast.require_text)}")
    if ast.note is not None:
        lines.append(f"  note {_quote(ast.note)}")
    lines.append(f": {show_side(ast.lhs)}")
    if isinstance(ast.modulus, ExactMod):
        lines.append(f"  = {show_side(ast.rhs)}")
    else:
        lines.append(f"  ~= {show_side(ast.rhs)}")
        lines.append(f"  mod {show_modulus(ast.modulus)}")
    return "\n".join(lines) + "\n"


# -- evaluation and lowering -------------------------------------------------------

class _Lin:
    """``a*k + b`` with rational coefficients (``a`` is 0 outside sums)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a, self.b = Fraction(a), Fraction(b)


def _eval(e, env: Mapping[str, int], index: str | None = None) -> _Lin:
    if isinstance(e, Num):
        return _Lin(0, e.value)
    if isinstance(e, Name):
        if e.id == index:
            return _Lin(1, 0)
        if e.id not in env:
            raise LowerError(f"parameter {e.id!r} is not bound")
        return _Lin(0, env[e.id])
    if isinstance(e, IntNeg):
        v = _eval(e.operand, env, index)
        return _Lin(-v.a, -v.b)
    if isinstance(e, IntPow):
        v = _eval(e.base, env, index)
        if e.exp < 0:
            raise LowerError(f"negative power in {show_expr(e)}")
        if v.a and e.exp > 1:
            raise LowerError(f"{show_expr(e)} is not affine in {index}")
        return v if e.exp == 1 else _Lin(0, v.b ** e.exp)
    if isinstance(e, ExactDiv):
        num, den = _eval(e.left, env, index), _eval(e.right, env, index)
        text = show_expr(e)
        if den.a:
            raise LowerError(f"{text} divides by an expression in {index}")
        if not den.b:
            raise IntegralityViolation(f"division by zero in {text}")
        if num.b.denominator != 1 or num.a.denominator != 1 or den.b.denominator != 1:
            raise IntegralityViolation(f"{text} is not an integer")
        a = exact_quotient(int(num.a), int(den.b), text) if num.a else 0
        return _Lin(a, exact_quotient(int(num.b), int(den.b), text))
    l, r = _eval(e.left, env, index), _eval(e.right, env, index)
    if e.op == "+":
        return _Lin(l.a + r.a, l.b + r.b)
    if e.op == "-":
        return _Lin(l.a - r.a, l.b - r.b)
    if l.a and r.a:
        raise LowerError(f"{show_expr(e)} is not affine in {index}")
    return _Lin(l.a * r.b + r.a * l.b, l.b * r.b)


def eval_int(e, env: Mapping[str, int]) -> int:
    v = _eval(e, env)
    return int(v.b)


def eval_cond(c, env: Mapping[str, int]) -> bool:
    if isinstance(c, Compare):
        l, r = eval_int(c.left, env), eval_int(c.right, env)
        if c.modulus is not None:
            m = eval_int(c.modulus, env)
            if m <= 0:
                return False
            same = (l - r) % m == 0
            if c.op == "==":
                return same
            if c.op == "!=":
                return not same
            raise LowerError(f"'{c.op}' cannot be combined with mod")
        return {"==": l == r, "!=": l != r, "<": l < r, "<=": l <= r,
                ">": l > r, ">=": l >= r}[c.op]
    if isinstance(c, InSet):
        v = eval_int(c.expr, env)
        return any(v == eval_int(x, env) for x in c.values)
    if isinstance(c, Not):
        return not eval_cond(c.operand, env)
    if c.op == "and":
        return eval_cond(c.left, env) and eval_cond(c.right, env)
    return eval_cond(c.left, env) or eval_cond(c.right, env)


class _Acc:
    """Flattened product: numerator and denominator Pochhammers plus a prefactor."""

    def __init__(self):
        self.num: list[PochSpec] = []
        self.den: list[PochSpec] = []
        self.const = Fraction(1)
        self.qexp = _Lin(0, 0)
        self.mono = [0, 0, 0, 0]


def _walk(t, acc: _Acc, sign: int, env, index, where: str) -> None:
    if isinstance(t, Group):
        _walk(t.inner, acc, sign, env, index, where)
    elif isinstance(t, Product):
        _walk(t.left, acc, sign, env, index, where)
        _walk(t.right, acc, sign, env, index, where)
    elif isinstance(t, Quotient):
        _walk(t.left, acc, sign, env, index, where)
        _walk(t.right, acc, -sign, env, index, where)
    elif isinstance(t, Neg):
        acc.const = -acc.const
        _walk(t.operand, acc, sign, env, index, where)
    elif isinstance(t, Const):
        if t.value == 0 and sign < 0:
            raise LowerError(f"division by zero in {where}")
        acc.const *= Fraction(t.value) ** sign
    elif isinstance(t, QPow):
        v = _Lin(0, 1) if t.exp is None else _eval(t.exp, env, index)
        acc.qexp = _Lin(acc.qexp.a + sign * v.a, acc.qexp.b + sign * v.b)
    elif isinstance(t, Var):
        acc.mono[var_index(t.name)] += sign * t.power
    elif isinstance(t, SignPow):
        v = _eval(t.exp, env, index)
        if v.a:
            raise LowerError(f"(-1)^{_show_prim(t.exp)} depends on {index}")
        if int(v.b) % 2:
            acc.const = -acc.const
    elif isinstance(t, QInt):
        n = eval_int(t.arg, env)
        top, bottom = PochSpec(QAtom.q(n), 1, Affine(0, 1)), PochSpec(QAtom.q(1), 1, Affine(0, 1))
        if sign > 0:
            acc.num.append(top)
            acc.den.append(bottom)
        else:
            acc.num.append(bottom)
            acc.den.append(top)
    elif isinstance(t, Poch):
        atom = _atom(t.atom, env)
        step = _eval(t.step, env)
        length = _eval(t.length, env, index)
        if length.a.denominator != 1 or length.b.denominator != 1:
            raise IntegralityViolation(f"{show_expr(t.length)} is not an integer")
        spec = PochSpec(atom, int(step.b), Affine(int(length.a), int(length.b)))
        (acc.num if sign > 0 else acc.den).append(spec)
    else:
        raise LowerError(f"unexpected node {type(t).__name__} in {where}")


def _atom(t, env) -> QAtom:
    acc = _Acc()
    _walk(t, acc, 1, env, None, "a Pochhammer argument")
    if acc.num or acc.den:
        raise LowerError("Pochhammer symbols cannot appear inside a Pochhammer argument")
    return QAtom(acc.const, int(acc.qexp.b), tuple(acc.mono))


def _side(s, env) -> SeriesSpec:
    if isinstance(s, Cases):
        return _side(s.then if eval_cond(s.cond, env) else s.other, env)
    if isinstance(s, Sum):
        lo = eval_int(s.lower, env)
        if lo != 0:
            raise LowerError("sums must start at 0")
        top = eval_int(s.upper, env)
        acc = _Acc()
        _walk(s.body, acc, 1, env, s.var, "the summand")
        power = Affine(int(acc.qexp.a), int(acc.qexp.b))
        return SeriesSpec(tuple(acc.num), tuple(acc.den), power, top, "", acc.const,
                          tuple(acc.mono))
    acc = _Acc()
    _walk(s, acc, 1, env, None, "a closed form")
    return closed_form_series(acc.num, acc.den, qexp=int(acc.qexp.b), const=acc.const,
                              mono=tuple(acc.mono), label="0" if acc.const == 0 else "")


def _modulus(m, env):
    if isinstance(m, PhiMod):
        return PhiPower(eval_int(m.n, env), eval_int(m.power, env))
    if isinstance(m, ParamMod):
        n = eval_int(m.n, env)
        return ParametricA(n, (n, -n) if m.both else (-n,))
    if isinstance(m, PrimeMod):
        return PrimePower(eval_int(m.p, env), eval_int(m.e, env))
    return ExactIdentity()


def _side_vars(s) -> set[str]:
    out: set[str] = set()

    def visit(node):
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, (Sum, Cases, Product, Quotient, Neg, Group, Poch)):
            for f in node.__dataclass_fields__:
                visit(getattr(node, f))
    visit(s)
    return out


def lower(ast: ClaimAst, params: Mapping[str, int], strict: bool = True) -> CongruenceClaim:
    """The claim at integer ``params``.

    With ``strict`` the sides are built at once, so integrality violations
    raise here; otherwise they surface (as with builtins) when the claim is
    verified, as a ``HYPOTHESIS_FAIL`` report.
    """
    missing = [p for p in ast.params if p not in params]
    if missing:
        raise LowerError(f"parameter {', '.join(missing)} of {ast.name} is not bound")
    extra = sorted(set(params) - set(ast.params))
    if extra:
        raise LowerError(f"{ast.name} has no parameter {', '.join(extra)}")
    env = {}
    for k in ast.params:
        v = params[k]
        if isinstance(v, bool) or not isinstance(v, int):
            raise LowerError(f"parameter {k} must be an integer")
        env[k] = v
    modulus = _modulus(ast.modulus, env)
    if ast.require is None:
        hyp = Hypothesis("none", lambda p: True)
    else:
        cond = ast.require
        hyp = Hypothesis(ast.require_text or show_cond(cond), lambda p: eval_cond(cond, p))
    variables = frozenset(_side_vars(ast.lhs) | _side_vars(ast.rhs))

    def build():
        return _side(ast.lhs, env), _side(ast.rhs, env)

    claim = CongruenceClaim(ast.name, make_params(env), modulus, variables, hyp, build,
                            ast.note or "")
    if strict:
        try:
            claim.sides
        except IntegralityViolation as exc:
            where = ", ".join(f"{k}={v}" for k, v in env.items())
            raise IntegralityViolation(f"{exc} with {where}") from None
    return claim


# -- shipped claim files -------------------------------------------------------------

@lru_cache(maxsize=None)
def shipped() -> dict[str, ClaimAst]:
    """Claims from the ``.qcl`` files bundled with the package, by name."""
    out: dict[str, ClaimAst] = {}
    folder = resources.files("qcongr.claims")
    for entry in sorted(folder.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".qcl"):
            for c in parse_module(ClaimSource(entry.read_text(encoding="utf-8"), entry.name)):
                out[c.name] = c
    return out


def shipped_claim(name: str, strict: bool = False, **params: int) -> CongruenceClaim:
    try:
        ast = shipped()[name]
    except KeyError:
        raise KeyError(f"no shipped claim named {name!r}") from None
    return lower(ast, params, strict=strict)
