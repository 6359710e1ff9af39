"""``qcongr``: verify claims, scan parameter ranges, run the identity and
p-adic suites, and check claim files.

Exit status: 0 when every executed check passed, 1 on FAIL or
NONINVERTIBLE, 2 when a single requested claim violates its side
conditions, 64 on usage errors and 65 on claim-file syntax errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import dsl, padlim
from .claims import builtins, identities
from .claims.engine import scan_claims, verify
from .claims.model import Outcome, VerificationReport, reports_to_csv, reports_to_json

EXIT_OK, EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 64, 65

COMMANDS = ("verify", "scan", "identities", "limits", "parse-check")
PADIC = ("in-1", "in-1-neg", "quarter", "limit-3")
STRATEGY_NAMES = {"auto": "Auto", "clearing": "Clearing", "pointeval": "PointEval"}
PARAM_FLAGS = ("d", "n", "s", "p", "N", "power")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    claims: list = field(default_factory=list)
    ranges: dict = field(default_factory=dict)
    strategy: str = "Auto"
    format: str = "pretty"
    output: str | None = None
    threads: int = 1
    seed: int = 0
    timings: bool = False
    claim_file: str | None = None
    options: dict = field(default_factory=dict)


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"1..9"``, ``"-1,1"`` or mixtures such as ``"1..3,7"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad range {text!r}; expected forms like 5, 1..9 or -1,1") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return sorted(set(out))


# -- argument parsing --------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p.add_argument("--output", "-o", help="write reports here instead of stdout")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads (QCONGR_THREADS overrides)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="include wall-clock milliseconds")


def _params(p: argparse.ArgumentParser) -> None:
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", dest=f"param_{name}", metavar="V")


def build_parser() -> argparse.ArgumentParser:
    catalogue = ", ".join(builtins.names() + list(identities.GRID_IDENTITIES)
                          + list(identities.RANDOM_IDENTITIES) + list(PADIC))
    top = _Parser(prog="qcongr", description="Exact verification of q-congruences.")
    sub = top.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", help="verify one claim instance",
                       epilog=f"claims: {catalogue}")
    v.add_argument("claim")
    v.add_argument("--strategy", default="auto", type=str.lower, choices=list(STRATEGY_NAMES))
    v.add_argument("--file", help="take the claim from this .qcl file")
    v.add_argument("--samples", type=int, default=200, help="random points (s-1, s-2)")
    _params(v)
    _common(v)

    s = sub.add_parser("scan", help="verify a claim over parameter ranges",
                       epilog="ranges: 5, 1..9, -1,1; inadmissible tuples are skipped")
    s.add_argument("claim")
    s.add_argument("--strategy", default="auto", type=str.lower, choices=list(STRATEGY_NAMES))
    s.add_argument("--file", help="take the claim from this .qcl file")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int)
    _params(s)
    _common(s)

    i = sub.add_parser("identities", help="the exact identity suite")
    i.add_argument("--chu-max", type=int, default=8, help="ss-0-0 for n = 0..N")
    i.add_argument("--saal-max", type=int, default=6, help="ss-0-3 for n = 0..N")
    i.add_argument("--samples", type=int, default=200, help="random points for s-1 and s-2")
    i.add_argument("--closed-forms", action="store_true",
                   help="also ss-0-1, ss-0-2, ss-0-4, ss-0-5 over their acceptance ranges")
    i.add_argument("--n-max", type=int, default=45, help="largest n for --closed-forms")
    _common(i)

    lim = sub.add_parser("limits", help="the p-adic (q -> 1) suite")
    lim.add_argument("--van-hamme", action="store_true")
    lim.add_argument("--quarter", action="store_true")
    lim.add_argument("--th3", action="store_true", help="the q -> 1 form of th-3")
    lim.add_argument("--p-max", type=int, help="largest prime to check (default: below 100/200/150)")
    lim.add_argument("--classical-sign", action="store_true",
                     help="check -Gamma_p(1/4)^4 (in-1-neg) instead of the stated sign")
    lim.add_argument("--d", default="2..4", dest="param_d", help="d values for --th3")
    _common(lim)

    pc = sub.add_parser("parse-check", help="parse claim files and report diagnostics")
    pc.add_argument("files", nargs="+")
    pc.add_argument("--pretty", action="store_true", help="print the canonical text")
    pc.add_argument("--output", "-o")
    return top


def config_from_args(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(argv)
    if ns.command is None:
        raise UsageError("missing command; expected one of " + ", ".join(COMMANDS))
    env = os.environ.get("QCONGR_THREADS")
    threads = getattr(ns, "threads", 1)
    if env:
        try:
            threads = int(env)
        except ValueError:
            raise UsageError(f"QCONGR_THREADS={env!r} is not an integer") from None
    if threads < 1:
        raise UsageError("parallelism must be >= 1")
    ranges = {}
    for name in PARAM_FLAGS:
        raw = getattr(ns, f"param_{name}", None)
        if raw is not None:
            ranges[name] = parse_range(raw)
    cfg = RunConfig(ns.command, ranges=ranges, threads=threads,
                    format=getattr(ns, "format", "pretty"), output=ns.output,
                    seed=getattr(ns, "seed", 0), timings=getattr(ns, "timings", False))
    if ns.command in ("verify", "scan"):
        cfg.claims = [ns.claim]
        cfg.strategy = STRATEGY_NAMES[ns.strategy]
        cfg.claim_file = ns.file
    if ns.command == "verify":
        cfg.options = {"samples": ns.samples}
    elif ns.command == "scan":
        cfg.options = {"n_min": ns.n_min, "n_max": ns.n_max}
    elif ns.command == "identities":
        cfg.options = {k: getattr(ns, k) for k in ("chu_max", "saal_max", "samples",
                                                   "closed_forms", "n_max")}
    elif ns.command == "limits":
        cfg.options = {k: getattr(ns, k) for k in ("van_hamme", "quarter", "th3", "p_max",
                                                   "classical_sign")}
    elif ns.command == "parse-check":
        cfg.claims = list(ns.files)
        cfg.options = {"pretty": ns.pretty}
    return cfg


# -- running -------------------------------------------------------------------------

def _load_file(path: str) -> dict[str, dsl.ClaimAst]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return {c.name: c for c in dsl.parse_module(dsl.ClaimSource(text, path))}


def _claim_maker(cfg: RunConfig):
    """``(parameter names, factory)`` for a builtin or a claim from ``--file``."""
    name = cfg.claims[0]
    if cfg.claim_file:
        asts = _load_file(cfg.claim_file)
        if name not in asts:
            raise UsageError(f"{cfg.claim_file} has no claim {name!r}; it has {', '.join(asts)}")
        ast = asts[name]
        return ast.params, lambda **p: dsl.lower(ast, p, strict=False)
    if name not in builtins.names():
        raise UsageError(f"unknown claim {name!r}; see 'qcongr verify --help'")
    return builtins.param_names(name), lambda **p: builtins.builtin(name, **p)


def _single(ranges: dict, allowed: Sequence[str], name: str) -> dict[str, int]:
    out = {}
    for k, vals in ranges.items():
        if k not in allowed:
            raise UsageError(f"{name} does not take --{k}")
        if len(vals) != 1:
            raise UsageError(f"verify takes single values; use 'qcongr scan' for --{k} ranges")
        out[k] = vals[0]
    return out


def _verify(cfg: RunConfig) -> tuple[list[VerificationReport], list[str], int]:
    name = cfg.claims[0]
    if not cfg.claim_file and name in identities.GRID_IDENTITIES + identities.RANDOM_IDENTITIES:
        allowed = ("n",) if name in identities.GRID_IDENTITIES else ("N",)
        params = _single(cfg.ranges, allowed, name)
        if name in identities.GRID_IDENTITIES and "n" not in params:
            raise UsageError(f"{name} needs --n")
        r = identities.verify_identity(name, samples=cfg.options["samples"], seed=cfg.seed,
                                       timings=cfg.timings, **params)
    elif not cfg.claim_file and name in PADIC:
        allowed = ("p", "d", "s") if name == "limit-3" else ("p",)
        params = _single(cfg.ranges, allowed, name)
        missing = [k for k in allowed if k not in params]
        if missing:
            raise UsageError(f"{name} needs --{' --'.join(missing)}")
        try:
            if name == "limit-3":
                r = padlim.verify_th3_limit(params["p"], params["d"], params["s"], cfg.timings)
            elif name == "quarter":
                r = padlim.verify_quarter_corollary(params["p"], cfg.timings)
            else:
                r = padlim.verify_van_hamme(params["p"], cfg.timings,
                                            sign=-1 if name == "in-1-neg" else 1)
        except ValueError as e:
            raise UsageError(str(e)) from None
    else:
        wanted, make = _claim_maker(cfg)
        params = _single(cfg.ranges, tuple(wanted) + ("power",), name)
        missing = [k for k in wanted if k not in params]
        if missing:
            raise UsageError(f"{name} needs --{' --'.join(missing)}")
        power = params.pop("power", None)
        try:
            claim = make(**params)
        except (TypeError, ValueError, KeyError) as e:
            raise UsageError(str(e)) from None
        if power is not None:
            from .claims.engine import with_modulus_power
            try:
                claim = with_modulus_power(claim, power)
            except TypeError as e:
                raise UsageError(str(e)) from None
        r = verify(claim, cfg.strategy, cfg.timings)
    status = {Outcome.PASS: EXIT_OK, Outcome.HYPOTHESIS_FAIL: EXIT_HYPOTHESIS}.get(r.outcome, EXIT_FAIL)
    return [r], [], status


def _scan(cfg: RunConfig) -> tuple[list[VerificationReport], list[str], int]:
    import itertools
    wanted, make = _claim_maker(cfg)
    ranges = dict(cfg.ranges)
    power = ranges.pop("power", None)
    extra = [k for k in ranges if k not in wanted]
    if extra:
        raise UsageError(f"{cfg.claims[0]} does not take --{' --'.join(extra)}")
    if "n" in wanted and "n" not in ranges and cfg.options.get("n_max") is not None:
        ranges["n"] = list(range(cfg.options["n_min"], cfg.options["n_max"] + 1))
    if "s" in wanted and "s" not in ranges:
        ranges["s"] = [-1, 1]
    missing = [k for k in wanted if k not in ranges]
    if missing:
        raise UsageError(f"scan of {cfg.claims[0]} needs ranges for --{' --'.join(missing)}")
    claims, skipped = [], 0
    for combo in itertools.product(*(ranges[k] for k in wanted)):
        params = dict(zip(wanted, combo))
        try:
            c = make(**params)
        except (TypeError, ValueError):
            skipped += 1
            continue
        if not c.hypothesis.holds(c.param_map):
            skipped += 1
            continue
        claims.append(c)
    if power is not None:
        from .claims.engine import with_modulus_power
        try:
            claims = [with_modulus_power(c, p) for c in claims for p in power]
        except TypeError as e:
            raise UsageError(str(e)) from None
    notes = []
    if skipped:
        notes.append(f"note: skipped {skipped} inadmissible parameter tuple(s)")
    reports = scan_claims(claims, cfg.strategy, cfg.timings, cfg.threads)
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    return reports, notes, status


def _identities(cfg: RunConfig) -> tuple[list[VerificationReport], list[str], int]:
    o = cfg.options
    grid = [("ss-0-0", n) for n in range(o["chu_max"] + 1)]
    grid += [("ss-0-3", n) for n in range(o["saal_max"] + 1)]
    reports = identities.identity_suite(grid, o["samples"], cfg.seed)
    if o["closed_forms"]:
        claims = []
        for name in identities.CLOSED_FORMS:
            minus = name in ("ss-0-1", "ss-0-4")
            for d in (range(2, 7) if minus else range(1, 6)):
                for n in range(3, o["n_max"] + 1, 2):
                    c = builtins.builtin(name, d=d, n=n)
                    if c.hypothesis.holds(c.param_map):
                        claims.append(c)
        reports += scan_claims(claims, "Auto", cfg.timings, cfg.threads)
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    return reports, [], status


def _limits(cfg: RunConfig) -> tuple[list[VerificationReport], list[str], int]:
    o = cfg.options
    chosen = [k for k in ("van_hamme", "quarter", "th3") if o[k]] or ["van_hamme", "quarter", "th3"]
    sign = -1 if o["classical_sign"] else 1
    # --p-max is inclusive; the defaults are the exclusive bounds 100, 200, 150
    pmax = o["p_max"] + 1 if o["p_max"] else None
    reports = []
    if "van_hamme" in chosen:
        reports += [padlim.verify_van_hamme(p, cfg.timings, sign)
                    for p in padlim.primes_below(pmax or 100) if p > 2]
    if "quarter" in chosen:
        reports += [padlim.verify_quarter_corollary(p, cfg.timings)
                    for p in padlim.primes_below(pmax or 200) if p % 4 == 3]
    if "th3" in chosen:
        for d in cfg.ranges.get("d", [2, 3, 4]):
            if d < 2:
                raise UsageError("--th3 needs d >= 2")
            for s in (-1, 1):
                reports += [padlim.verify_th3_limit(p, d, s, cfg.timings)
                            for p in padlim.primes_below(pmax or 150)
                            if (p - s) % (2 * d) == 0 and (2 * d) % p]
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    return reports, [], status


def _parse_check(cfg: RunConfig) -> tuple[str, list[str], int]:
    out, notes, status = [], [], EXIT_OK
    for path in cfg.claims:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
        try:
            asts = dsl.parse_module(dsl.ClaimSource(text, path))
        except dsl.DslError as e:
            notes.append(e.render())
            status = EXIT_PARSE
            continue
        for a in asts:
            if cfg.options["pretty"]:
                out.append(dsl.pretty(a))
            else:
                out.append(f"{path}: {a.name} ({', '.join(a.params)}) mod "
                           f"{dsl.show_modulus(a.modulus)}")
        notes.append(f"{path}: {len(asts)} claim(s) OK")
    return "\n".join(out) + ("\n" if out else ""), notes, status


def render(reports: Sequence[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return reports_to_json(reports)
    if fmt == "csv":
        return reports_to_csv(reports)
    return "".join(r.pretty() + "\n" for r in reports)


def run(cfg: RunConfig) -> int:
    """Execute ``cfg``, write the report stream, and return the exit status."""
    if cfg.command == "parse-check":
        text, notes, status = _parse_check(cfg)
    else:
        handler = {"verify": _verify, "scan": _scan, "identities": _identities,
                   "limits": _limits}[cfg.command]
        reports, notes, status = handler(cfg)
        text = render(reports, cfg.format)
    for n in notes:
        print(n, file=sys.stderr)
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        return run(config_from_args(argv))
    except UsageError as e:
        print(f"qcongr: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except dsl.DslError as e:
        print(e.render(), file=sys.stderr)
        return EXIT_PARSE
    except SystemExit as e:      # --help
        return int(e.code or 0)


if __name__ == "__main__":
    sys.exit(main())
