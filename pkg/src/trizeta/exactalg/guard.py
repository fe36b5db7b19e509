"""Runaway guard for exact arithmetic.

TRIZETA_MAX_BITS caps the bit size of numerators and denominators that
exact kernels are allowed to produce.  Unset or 0 means no cap.
"""
from __future__ import annotations

import os
from fractions import Fraction


class BitSizeExceeded(ArithmeticError):
    pass


EXPONENT_LIMIT = 2**31


def _read_env() -> int:
    raw = os.environ.get("TRIZETA_MAX_BITS", "").strip()
    if not raw:
        return 0
    try:
        return max(int(raw), 0)
    except ValueError:
        return 0


_cap = _read_env()


def max_bits() -> int:
    return _cap


def set_max_bits(bits: int | None = None) -> None:
    """Override the cap; None re-reads the environment."""
    global _cap
    _cap = _read_env() if bits is None else max(int(bits), 0)


def check_bits(x) -> None:
    cap = _cap
    if not cap:
        return
    if isinstance(x, Fraction):
        parts = (x.numerator, x.denominator)
    elif isinstance(x, int):
        parts = (x,)
    elif hasattr(x, "a") and hasattr(x, "b"):
        parts = (x.a.numerator, x.a.denominator, x.b.numerator, x.b.denominator)
    else:
        return
    for p in parts:
        if p.bit_length() > cap:
            raise BitSizeExceeded(f"exact value exceeds {cap} bits")


def check_exponent(e: int) -> int:
    if not -EXPONENT_LIMIT < e < EXPONENT_LIMIT:
        raise OverflowError(f"exponent {e} out of range")
    return e
