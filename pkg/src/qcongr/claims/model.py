"""Claim and report records shared by the engines, the DSL and the CLI."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Mapping

from ..qseries import SeriesSpec


class Outcome(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"
    NONINVERTIBLE = "NONINVERTIBLE"

    def __str__(self) -> str:
        return self.value


# -- modulus descriptors

@dataclass(frozen=True)
class PhiPower:
    n: int
    power: int

    def __str__(self) -> str:
        return f"Phi_{self.n}(q)^{self.power}"


@dataclass(frozen=True)
class ParametricA:
    """``prod (1 - a q^n)``-style moduli, verified at the zeros ``a = q**e``."""

    n: int
    zeros: tuple[int, ...]

    def __str__(self) -> str:
        if set(self.zeros) == {self.n, -self.n}:
            return f"(1-a*q^{self.n})(a-q^{self.n})"
        return f"(1-a*q^{self.n})"


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int

    def __str__(self) -> str:
        return f"{self.p}^{self.e}"


@dataclass(frozen=True)
class ExactIdentity:
    def __str__(self) -> str:
        return "exact"


@dataclass(frozen=True)
class Hypothesis:
    """Side conditions of a claim; ``check`` receives the parameter map."""

    text: str
    check: Callable[[Mapping[str, int]], bool] = field(compare=False)

    def holds(self, params: Mapping[str, int]) -> bool:
        try:
            return bool(self.check(params))
        except (KeyError, ZeroDivisionError):
            return False


ALWAYS = Hypothesis("none", lambda p: True)


@dataclass(frozen=True, eq=False)
class CongruenceClaim:
    """``lhs == rhs`` modulo ``modulus``.

    Both sides are built lazily by ``build`` so that a claim with violated
    side conditions (for which the bounds need not even be integers) can
    still be reported as ``HYPOTHESIS_FAIL``.
    """

    name: str
    params: tuple[tuple[str, int], ...]
    modulus: object
    variables: frozenset
    hypothesis: Hypothesis
    build: Callable[[], tuple[SeriesSpec, SeriesSpec]] = field(repr=False)
    notes: str = ""

    @property
    def param_map(self) -> dict[str, int]:
        return dict(self.params)

    @cached_property
    def sides(self) -> tuple[SeriesSpec, SeriesSpec]:
        return self.build()

    @property
    def lhs(self) -> SeriesSpec:
        return self.sides[0]

    @property
    def rhs(self) -> SeriesSpec:
        return self.sides[1]

    def describe(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.name}({ps}) mod {self.modulus}"


def make_params(params: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
    return tuple(sorted((k, int(v)) for k, v in params.items()))


# -- reports

@dataclass(frozen=True)
class VerificationReport:
    claim: str
    params: tuple[tuple[str, int], ...]
    strategy: str
    outcome: Outcome
    residue: str | None = None
    millis: float | None = None
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "strategy": self.strategy,
            "outcome": self.outcome.value,
            "residue": self.residue,
            "millis": self.millis,
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))

    def pretty(self, width: int = 120) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params)
        line = f"{self.claim:<10} {ps:<24} {self.strategy:<10} {self.outcome.value}"
        if self.millis is not None:
            line += f"  {self.millis:.1f} ms"
        if self.detail:
            line += f"  ({self.detail})"
        if self.residue is not None:
            res = self.residue
            if len(res) > width:
                res = res[:width] + f"... [truncated, {len(self.residue)} chars; full residue in JSON]"
            line += f"\n    residue: {res}"
        return line


CSV_FIELDS = ("claim", "params", "strategy", "outcome", "residue", "millis", "detail")


def reports_to_json(reports) -> str:
    return "\n".join(r.to_json() for r in reports) + ("\n" if reports else "")


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        d = r.to_dict()
        d["params"] = ";".join(f"{k}={v}" for k, v in r.params)
        w.writerow(["" if d[f] is None else d[f] for f in CSV_FIELDS])
    return buf.getvalue()
