"""Verification reports and the value encoding shared with the CLI."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from ..exactalg import QuadExt, SparseLaurent


def encode_value(x):
    """JSON-friendly form: exact rationals as "p/q", complex as [re, im]."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    if isinstance(x, QuadExt):
        return f"{encode_value(x.a)}+{encode_value(x.b)}*sqrt({encode_value(x.d)})"
    if isinstance(x, complex):
        return [float(f"{x.real:.17g}"), float(f"{x.imag:.17g}")]
    if isinstance(x, float):
        return float(f"{x:.17g}")
    if isinstance(x, SparseLaurent):
        return repr(x)
    if isinstance(x, (tuple, list)):
        return [encode_value(v) for v in x]
    if isinstance(x, dict):
        return {str(k): encode_value(v) for k, v in x.items()}
    return str(x)


@dataclass
class VerificationReport:
    name: str
    status: str  # pass | fail | skipped
    checked: int = 0
    witness: dict | None = None
    wall_time: float = 0.0
    flags: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["witness"] = encode_value(self.witness) if self.witness is not None else None
        d["details"] = encode_value(self.details)
        d["wall_time"] = float(f"{self.wall_time:.17g}")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(name=d["name"], status=d["status"], checked=d.get("checked", 0),
                   witness=d.get("witness"), wall_time=d.get("wall_time", 0.0),
                   flags=list(d.get("flags", [])), details=dict(d.get("details", {})))

    def line(self) -> str:
        extra = ""
        if self.witness:
            extra = " witness=" + ", ".join(f"{k}={encode_value(v)}" for k, v in self.witness.items())
        flags = f" [{' '.join(self.flags)}]" if self.flags else ""
        return f"{self.status.upper():7s} {self.name} (checked {self.checked}, {self.wall_time:.3f}s){flags}{extra}"


def mismatch(index, expected, actual) -> dict:
    return {"index": encode_value(index), "expected": encode_value(expected), "actual": encode_value(actual)}


@contextmanager
def timed():
    box = {"start": time.perf_counter(), "elapsed": 0.0}
    try:
        yield box
    finally:
        box["elapsed"] = time.perf_counter() - box["start"]


def compare_sequences(name: str, expected, actual, started: float, flags=None, details=None) -> VerificationReport:
    """Coefficientwise exact comparison, first mismatch becomes the witness."""
    flags = list(flags or [])
    n = min(len(expected), len(actual))
    for i in range(n):
        if expected[i] != actual[i]:
            return VerificationReport(name, "fail", i + 1, mismatch(i, expected[i], actual[i]),
                                      time.perf_counter() - started, flags, details or {})
    if len(expected) != len(actual):
        return VerificationReport(name, "fail", n, mismatch(n, len(expected), len(actual)),
                                  time.perf_counter() - started, flags, details or {})
    return VerificationReport(name, "pass", n, None, time.perf_counter() - started, flags, details or {})


def error_report(name: str, exc: BaseException, started: float, flags=None) -> VerificationReport:
    return VerificationReport(name, "fail", 0, {"error": type(exc).__name__, "message": str(exc)},
                              time.perf_counter() - started, list(flags or []))
