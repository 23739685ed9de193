"""Conversion between conjugate diameters and the implicit conic equation.

``A x^2 + B xy + C y^2 + D x + E y + F = 0``.  Everything here is floating
point; it feeds plot setup, not the inner loop.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass

from .errors import (
    ConicSignError,
    DegenerateGeometryError,
    NotAnEllipseError,
    NotCenteredError,
    UncalibratedError,
)
from .refmodel import RealPoint

log = logging.getLogger(__name__)

CALIBRATION_RTOL = 1e-9


@dataclass(frozen=True)
class ImplicitConic:
    a: float
    b: float
    c: float
    d: float = 0.0
    e: float = 0.0
    f: float = 0.0

    @property
    def discriminant(self) -> float:
        return self.b * self.b - 4.0 * self.a * self.c

    def is_ellipse(self) -> bool:
        return self.discriminant < 0.0

    def is_centered(self) -> bool:
        return self.d == 0.0 and self.e == 0.0

    def scaled(self, s: float) -> "ImplicitConic":
        return ImplicitConic(*(s * v for v in self.coefficients()))

    def coefficients(self) -> tuple[float, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def __call__(self, x: float, y: float) -> float:
        return (self.a * x * x + self.b * x * y + self.c * y * y
                + self.d * x + self.e * y + self.f)

    def to_dict(self) -> dict[str, float]:
        return {k.upper(): v for k, v in asdict(self).items()}

    @classmethod
    def from_dict(cls, data: dict) -> "ImplicitConic":
        lower = {str(k).lower(): float(v) for k, v in data.items()}
        return cls(**{k: lower.get(k, 0.0) for k in "abcdef"})


def implicit_from_conjugate(p, q) -> ImplicitConic:
    xP, yP = float(p[0]), float(p[1])
    xQ, yQ = float(q[0]), float(q[1])
    cross = xP * yQ - xQ * yP
    if cross == 0.0:
        raise DegenerateGeometryError("P and Q are collinear with the center")
    return ImplicitConic(
        a=yP * yP + yQ * yQ,
        b=-2.0 * (xP * yP + xQ * yQ),
        c=xP * xP + xQ * xQ,
        d=0.0,
        e=0.0,
        f=-cross * cross,
    )


def implicit_from_conjugate_at(center, p, q) -> ImplicitConic:
    """Coefficients of the ellipse ``center + P cos t + Q sin t`` (P, Q relative)."""
    c = implicit_from_conjugate(p, q)
    x0, y0 = float(center[0]), float(center[1])
    return ImplicitConic(
        c.a,
        c.b,
        c.c,
        -2.0 * c.a * x0 - c.b * y0,
        -2.0 * c.c * y0 - c.b * x0,
        c.a * x0 * x0 + c.b * x0 * y0 + c.c * y0 * y0 + c.f,
    )


def translate_to_origin(c: ImplicitConic) -> tuple[ImplicitConic, RealPoint]:
    """Move the ellipse center to the origin; returns the centered conic and the center."""
    if not c.is_ellipse():
        raise NotAnEllipseError(f"B^2 - 4AC = {c.discriminant} is not negative")
    den = 4.0 * c.a * c.c - c.b * c.b
    x0 = (c.b * c.e - 2.0 * c.c * c.d) / den
    y0 = (c.b * c.d - 2.0 * c.a * c.e) / den
    f0 = (c.a * x0 * x0 + c.b * x0 * y0 + c.c * y0 * y0
          + c.d * x0 + c.e * y0 + c.f)
    return ImplicitConic(c.a, c.b, c.c, 0.0, 0.0, f0), RealPoint(x0, y0)


def calibration_number(c: ImplicitConic) -> float:
    """``-4F / (4AC - B^2)`` for an origin-centered conic."""
    if not c.is_centered():
        raise NotCenteredError("calibration needs an origin-centered conic (D = E = 0)")
    den = 4.0 * c.a * c.c - c.b * c.b
    if den == 0.0:
        raise DegenerateGeometryError("4AC - B^2 is zero")
    return -4.0 * c.f / den


def calibrate(c: ImplicitConic) -> ImplicitConic:
    return c.scaled(calibration_number(c))


def is_calibrated(c: ImplicitConic, rtol: float = CALIBRATION_RTOL) -> bool:
    return abs(calibration_number(c) - 1.0) <= rtol


def aux_radius_from_implicit(c: ImplicitConic) -> float:
    """Auxiliary radius from calibrated, origin-centered coefficients."""
    return math.sqrt(0.5 * (c.a + c.c + math.hypot(c.a - c.c, c.b)))


def conjugate_from_implicit(c: ImplicitConic, strict: bool = False) -> tuple[RealPoint, RealPoint]:
    """A conjugate pair with P on the +x axis and Q in the upper half plane.

    Uncalibrated input is calibrated first unless ``strict`` is set, in which
    case it is rejected.
    """
    if not c.is_centered():
        raise NotCenteredError("translate the conic to the origin first")
    if not c.is_ellipse():
        raise NotAnEllipseError(f"B^2 - 4AC = {c.discriminant} is not negative")
    if not is_calibrated(c):
        if strict:
            raise UncalibratedError(
                f"calibration number {calibration_number(c)} is not 1"
            )
        log.info("calibrating conic by %g", calibration_number(c))
        c = calibrate(c)
    if not (c.a > 0.0 and c.f < 0.0):
        raise ConicSignError(f"need A > 0 and F < 0, got A={c.a}, F={c.f}")
    xP = math.sqrt(-c.f / c.a)
    yQ = math.sqrt(c.a)
    xQ = -c.b / (2.0 * yQ)
    return RealPoint(xP, 0.0), RealPoint(xQ, yQ)


def conjugate_from_general(c: ImplicitConic, strict: bool = False):
    """Center plus conjugate pair for a conic with arbitrary D, E."""
    centered, center = translate_to_origin(c)
    p, q = conjugate_from_implicit(centered, strict=strict)
    return center, p, q


def same_conic(c1: ImplicitConic, c2: ImplicitConic, rtol: float = 1e-9) -> bool:
    """Coefficient-wise agreement after scaling both to the same norm."""
    v1, v2 = c1.coefficients(), c2.coefficients()
    n1 = math.sqrt(sum(v * v for v in v1))
    n2 = math.sqrt(sum(v * v for v in v2))
    if n1 == 0.0 or n2 == 0.0:
        return n1 == n2
    return all(abs(a / n1 - b / n2) <= rtol for a, b in zip(v1, v2))
