"""Helpers for integers far beyond float range."""

from __future__ import annotations

import math
import sys


def int_log10(x: int) -> float:
    """log10 of a positive integer of any size, good to ~15 digits."""
    if x <= 0:
        raise ValueError("log10 of non-positive integer")
    if x.bit_length() <= 900:
        return math.log10(x)
    shift = x.bit_length() - 53
    return math.log10(x >> shift) + shift * math.log10(2)


def digits10(x: int) -> int:
    """Decimal digit count of a non-negative integer (str-limit safe)."""
    if x < 0:
        raise ValueError("negative")
    if x < 10:
        return 1
    approx = int(int_log10(x))
    # settle the boundary exactly
    for d in (approx, approx + 1, approx + 2):
        if x < 10**d:
            return d
    raise AssertionError("digit estimate off by more than 2")


def big_str(x: int) -> str:
    """Decimal string of an integer, lifting the interpreter's conversion cap."""
    needed = digits10(abs(x)) + 10
    if hasattr(sys, "get_int_max_str_digits") and sys.get_int_max_str_digits() < needed:
        sys.set_int_max_str_digits(needed)
    return str(x)
