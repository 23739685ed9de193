"""16.16 fixed-point scalars.

A fixed-point value is carried as a plain Python ``int`` holding the raw
two's-complement bits; its numeric value is ``raw / 65536``.  Python's ``>>``
on ints already floors toward negative infinity, which is exactly the
arithmetic right shift the plotting loops rely on, and the same expressions
work unchanged on ``numpy`` int64 arrays for vectorised sweeps.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import FixedOverflowError, FixedRangeError

Fixed = int

FRAC_BITS = 16
ONE: Fixed = 1 << FRAC_BITS
RAW_MIN = -(1 << 31)
RAW_MAX = (1 << 31) - 1

# round(2*pi * 65536); truncation would give 411774
FIX_2PI: Fixed = 411775

# |coordinate| < 16384 px keeps x_P + x_Q inside 32 bits
COORD_LIMIT_PX = 16384
COORD_LIMIT: Fixed = COORD_LIMIT_PX << FRAC_BITS

# Validating mode checks 32-bit overflow on emitted points and checked ops.
VALIDATE = True


class PointFx(NamedTuple):
    """A point or vector with 16.16 fixed-point components."""

    x: Fixed
    y: Fixed

    def __add__(self, other):  # type: ignore[override]
        return PointFx(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return PointFx(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return PointFx(-self.x, -self.y)

    def to_floats(self) -> tuple[float, float]:
        return (to_float(self.x), to_float(self.y))

    @classmethod
    def from_floats(cls, x: float, y: float) -> "PointFx":
        return cls(from_float(x), from_float(y))


def from_float(v: float) -> Fixed:
    """Convert a real to 16.16, truncating toward zero like a C cast."""
    if not math.isfinite(v) or abs(v) >= 32768.0:
        raise FixedRangeError(f"{v!r} is outside the 16.16 range (|v| < 32768)")
    return math.trunc(v * ONE)


def to_float(x: Fixed) -> float:
    return x / ONE


def shr(x: Fixed, k: int) -> Fixed:
    """Arithmetic right shift, i.e. ``floor(x / 2**k)``."""
    if not 0 <= k <= 31:
        raise ValueError(f"shift count {k} outside 0..31")
    return x >> k


def check(x: Fixed) -> Fixed:
    """Return ``x`` unchanged, or raise if it does not fit in 32 bits."""
    if x < RAW_MIN or x > RAW_MAX:
        raise FixedOverflowError(f"raw value {x} overflows 32 bits")
    return x


def add(a: Fixed, b: Fixed) -> Fixed:
    return check(a + b) if VALIDATE else a + b


def sub(a: Fixed, b: Fixed) -> Fixed:
    return check(a - b) if VALIDATE else a - b


def check_coord(x: Fixed, name: str = "coordinate") -> Fixed:
    if abs(x) >= COORD_LIMIT:
        raise FixedRangeError(
            f"{name} {to_float(x)} px is outside the supported range "
            f"(|x| < {COORD_LIMIT_PX} px)"
        )
    return x


def check_point(p: PointFx, name: str = "point") -> PointFx:
    check_coord(p.x, name + ".x")
    check_coord(p.y, name + ".y")
    return p


def format_fixed(x: Fixed) -> str:
    """Four-decimal text form used by the SVG and CSV writers."""
    return f"{x / ONE:.4f}"
