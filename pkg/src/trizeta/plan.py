"""Test plans: INI files naming suites, their family and their parameters.

    [plan]
    seed = 42

    [rankin-r3]
    family = rankin
    r = 3
    ell = 0..2
    N = 8

A suite inherits the plan seed unless it sets its own.  Everything is parsed
and validated up front so that a bad plan fails before any suite runs.
"""
from __future__ import annotations

import configparser
import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .geometry.checks import SUITES as GEOMETRY_CHECKS


class PlanError(ValueError):
    """A plan that does not parse or validate; carries the source position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


# value parsers ----------------------------------------------------------

def _int(text: str) -> int:
    return int(text.strip())


def _int_list(text: str) -> list[int]:
    """'3', '3,4,5' or '0..3' (inclusive)."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError("empty list")
    return out


def _triples(text: str) -> list[tuple]:
    """'3,3,3; 4,3,3'."""
    out = []
    for part in text.split(";"):
        if part.strip():
            t = tuple(int(v) for v in part.split(","))
            if len(t) != 3:
                raise ValueError(f"{part.strip()!r} is not a triple")
            out.append(t)
    if not out:
        raise ValueError("empty list")
    return out


def _number(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        return float(text)


def _number_list(text: str) -> list:
    out = [_number(v) for v in text.split(",") if v.strip()]
    if not out:
        raise ValueError("empty list")
    return out


def _fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def _float(text: str) -> float:
    return float(text)


def _bool(text: str) -> bool:
    v = text.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _words(text: str) -> list[str]:
    out = [w.strip() for w in text.replace(";", ",").split(",") if w.strip()]
    if not out:
        raise ValueError("empty list")
    return out


# family schemas: key -> (parser, default, check) ------------------------

def _positive(v):
    return all(x > 0 for x in v) if isinstance(v, list) else v > 0


def _nonneg(v):
    return all(x >= 0 for x in v) if isinstance(v, list) else v >= 0


def _ranks(v):
    return all(x >= 3 for x in (v if isinstance(v[0], int) else [y for t in v for y in t]))


def _prime_power(q) -> bool:
    if q != int(q) or q < 2:
        return False
    q = int(q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def _q_values(v):
    # q is a residue field size
    return all(_prime_power(x) for x in v)


def _subset(allowed):
    return lambda v: set(v) <= set(allowed)


_COMMON = {"seed": (_int, None, None), "perturb": (_bool, False, None)}

SCHEMAS: dict[str, dict] = {
    "rankin": {
        "r": (_int_list, [3], _ranks),
        "ell": (_int_list, [0, 1, 2], _nonneg),
        "N": (_int, 8, _nonneg),
        "points": (_int, 5, _positive),
        "checks": (_words, ["lemma"], _subset(["lemma", "cofactor", "cauchy"])),
        "cofactor_ell": (_int_list, [0, 1, 2, 3], _nonneg),
        "cauchy_m": (_int, 2, _positive),
        "cauchy_sets": (_int, 3, _positive),
        "cauchy_N": (_int, 6, _nonneg),
    },
    "theorem": {
        "r": (_triples, [(3, 3, 3)], _ranks),
        "q": (_number_list, [5, 25], _q_values),
        "trials": (_int, 5, _positive),
        "tol": (_float, 1e-8, _positive),
        "margin": (_float, 1.0, _positive),
    },
    "rationality": {
        "r": (_triples, [(3, 3, 3)], _ranks),
        "points": (_int, 10, _positive),
        "N": (_int, 6, _nonneg),
        "q": (_fraction, Fraction(5), lambda v: _prime_power(v)),
        "compatible": (_bool, True, None),
    },
    "tempered": {
        "r": (_triples, [(3, 3, 3)], _ranks),
        "q": (_number_list, [5, 7, 11, 13, 17, 25], _q_values),
        "eps": (_float, 0.5, _positive),
        "trials": (_int, 10, _positive),
        "constant": (_float, 50.0, _positive),
    },
    "geometry": {
        "beta": (_fraction, Fraction(1), lambda v: v != 0),
        "checks": (_words, None, _subset(GEOMETRY_CHECKS)),
        "table": (_int, 50, _positive),
        "pl_comp": (_int, 50, _positive),
        "pli2": (_int, 50, _positive),
        "action": (_int, 200, _positive),
        "pairing": (_int, 200, _positive),
        "fibers": (_int, 100, _positive),
        "stabilizers": (_int, 50, _positive),
        "borel": (_int, 50, _positive),
    },
    "symfunc": {
        "r": (_int_list, [3, 4, 5], _positive),
        "N": (_int, 6, _nonneg),
        "points": (_int, 3, _positive),
    },
}

FAMILIES = tuple(SCHEMAS)


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    family: str
    params: dict = field(hash=False)

    def describe(self) -> dict:
        from .zeta.report import encode_value
        return {"name": self.name, "family": self.family, "params": encode_value(self.params)}


@dataclass(frozen=True)
class TestPlan:
    suites: tuple
    digest: str
    seed: int | None = None
    source: str = "<string>"

    __test__ = False  # not a pytest class


def _positions(text: str) -> dict:
    """(section, key) -> (line, column of the value), by a light scan of the source."""
    pos, section = {}, None
    for n, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s[0] in "#;":
            continue
        if s.startswith("[") and s.endswith("]"):
            section = s[1:-1].strip()
            pos[(section, None)] = (n, raw.index("[") + 1)
            continue
        for sep in ("=", ":"):
            if sep in raw:
                key = raw.split(sep, 1)[0].strip()
                col = raw.index(sep) + 2
                while col <= len(raw) and raw[col - 1] == " ":
                    col += 1
                pos[(section, key)] = (n, col)
                break
    return pos


def _config_error(exc: configparser.Error, text: str) -> PlanError:
    line = getattr(exc, "lineno", None)
    if isinstance(exc, configparser.MissingSectionHeaderError):
        msg = f"expected a [section] header, got {exc.line.strip()!r}"
    elif isinstance(exc, configparser.ParsingError) and getattr(exc, "errors", None):
        line = exc.errors[0][0]
        msg = f"cannot parse {text.splitlines()[line - 1].strip()!r}"
    else:
        msg = str(exc).splitlines()[0].split("]: ", 1)[-1]
    return PlanError(msg, line, 1 if line is not None else None)


def parse_plan(text: str, source: str = "<string>") -> TestPlan:
    digest = hashlib.sha256(text.encode()).hexdigest()
    cp = configparser.ConfigParser(interpolation=None, default_section="__none__")
    cp.optionxform = str
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise _config_error(exc, text) from None
    pos = _positions(text)
    plan_seed = None
    if cp.has_section("plan"):
        for key in cp["plan"]:
            if key != "seed":
                raise PlanError(f"unknown plan key {key!r}", *pos.get(("plan", key), (None, None)))
        if "seed" in cp["plan"]:
            try:
                plan_seed = _int(cp["plan"]["seed"])
            except ValueError:
                raise PlanError("seed must be an integer", *pos.get(("plan", "seed"), (None, None))) from None
    suites = []
    for name in cp.sections():
        if name == "plan":
            continue
        sec = cp[name]
        where = pos.get((name, None), (None, None))
        family = sec.get("family")
        if family is None:
            raise PlanError(f"suite {name!r} has no family", *where)
        if family not in SCHEMAS:
            raise PlanError(f"suite {name!r}: unknown family {family!r} (known: {', '.join(FAMILIES)})",
                            *pos.get((name, "family"), where))
        schema = {**_COMMON, **SCHEMAS[family]}
        params = {}
        for key, raw in sec.items():
            if key == "family":
                continue
            at = pos.get((name, key), where)
            if key not in schema:
                raise PlanError(f"suite {name!r}: unknown parameter {key!r} for family {family}", *at)
            parser, _, check = schema[key]
            try:
                value = parser(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise PlanError(f"suite {name!r}: bad value for {key}: {exc}", *at) from None
            if check is not None and not check(value):
                raise PlanError(f"suite {name!r}: {key} = {raw.strip()} is out of range", *at)
            params[key] = value
        for key, (_, default, _) in schema.items():
            params.setdefault(key, default)
        if params["seed"] is None:
            if plan_seed is None:
                raise PlanError(f"suite {name!r} has no seed and the plan sets none", *where)
            params["seed"] = plan_seed
        if family == "geometry" and params["checks"] is None:
            params.pop("checks")
        suites.append(SuiteSpec(name, family, params))
    return TestPlan(tuple(suites), digest, plan_seed, source)


def load_plan(path) -> TestPlan:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise PlanError(f"cannot read plan {path}: {exc.strerror}") from None
    return parse_plan(text, str(path))


__all__ = ["PlanError", "SuiteSpec", "TestPlan", "SCHEMAS", "FAMILIES", "parse_plan", "load_plan"]
