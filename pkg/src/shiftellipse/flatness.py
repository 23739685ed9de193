"""Automatic choice of the angular increment from a flatness tolerance.

The worst chord-to-arc gap on an ellipse equals the gap on its auxiliary
circle (radius = semi-major axis), so everything here reduces to estimating
that radius and finding the coarsest ``eps = 2**-k`` whose sagitta on the
auxiliary circle stays within the requested flatness.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGeometryError
from .fixed import Fixed, PointFx, from_float, to_float
from .refmodel import chord_to_arc_exact

DEFAULT_KMAX = 6
DEFAULT_FLATNESS = 0.25
FLATNESS_MIN = 1.0 / 16.0
FLATNESS_MAX = 64.0


class FlatnessClampWarning(UserWarning):
    pass


@dataclass(frozen=True)
class FlatnessConfig:
    """Flatness in pixels (stored 16.16) plus the ``k`` ceiling.

    ``strict`` swaps the shift-add radius estimate and truncated series for
    the exact auxiliary radius and the exact sagitta.
    """

    flatness: Fixed = from_float(DEFAULT_FLATNESS)
    kmax: int = DEFAULT_KMAX
    strict: bool = False

    def __post_init__(self):
        if not 0 <= self.kmax <= 15:
            raise ValueError(f"kmax={self.kmax} must lie in 0..15")
        if self.flatness <= 0:
            raise ValueError("flatness must be positive")

    @classmethod
    def from_pixels(cls, flatness: float, kmax: int = DEFAULT_KMAX, strict: bool = False):
        """Build a config, clamping ``flatness`` to [1/16, 64] px with a warning."""
        if not math.isfinite(flatness) or flatness <= 0:
            raise ValueError(f"flatness must be a positive number, got {flatness!r}")
        clamped = min(max(flatness, FLATNESS_MIN), FLATNESS_MAX)
        if clamped != flatness:
            warnings.warn(
                f"flatness {flatness} px clamped to {clamped} px",
                FlatnessClampWarning,
                stacklevel=2,
            )
        return cls(from_float(clamped), kmax, strict)

    @property
    def flatness_px(self) -> float:
        return to_float(self.flatness)


def vlen(x: Fixed, y: Fixed) -> Fixed:
    """Shift-add estimate of ``hypot(x, y)``; error within about -2.8%..+0.78%."""
    x = abs(x)
    y = abs(y)
    if x > y:
        return x + max(y >> 3, (y >> 1) - (x >> 3))
    return y + max(x >> 3, (x >> 1) - (y >> 3))


def vlen_array(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorised :func:`vlen` over int64 arrays (bit-identical results)."""
    x = np.abs(x)
    y = np.abs(y)
    big = np.maximum(x, y)
    small = np.minimum(x, y)
    return big + np.maximum(small >> 3, (small >> 1) - (big >> 3))


def aux_radius(p: PointFx, q: PointFx) -> Fixed:
    """Estimate the auxiliary-circle radius from center-relative P and Q.

    Takes the longest of |OP|, |OQ| (inflated by 1/16) and of the
    half-diagonals |OJ|/sqrt2, |OK|/sqrt2 of the enclosing parallelogram
    (approximated as 3/4 of the corner distance).
    """
    xP, yP = p
    xQ, yQ = q
    dP = vlen(xP, yP)
    dQ = vlen(xQ, yQ)
    dJ = vlen(xP + xQ, yP + yQ)
    dK = vlen(xP - xQ, yP - yQ)
    r1 = max(dP, dQ)
    r2 = max(dJ, dK)
    return max(r1 + (r1 >> 4), r2 - (r2 >> 2))


def aux_radius_array(xP, yP, xQ, yQ) -> np.ndarray:
    dP = vlen_array(xP, yP)
    dQ = vlen_array(xQ, yQ)
    dJ = vlen_array(xP + xQ, yP + yQ)
    dK = vlen_array(xP - xQ, yP - yQ)
    r1 = np.maximum(dP, dQ)
    r2 = np.maximum(dJ, dK)
    return np.maximum(r1 + (r1 >> 4), r2 - (r2 >> 2))


def aux_radius_exact(p, q) -> float:
    """Exact auxiliary radius (semi-major axis) from a real conjugate pair."""
    xP, yP = float(p[0]), float(p[1])
    xQ, yQ = float(q[0]), float(q[1])
    if xP * yQ - xQ * yP == 0.0:
        raise DegenerateGeometryError("P and Q are collinear with the center")
    A = yP * yP + yQ * yQ
    B = -2.0 * (xP * yP + xQ * yQ)
    C = xP * xP + xQ * xQ
    return math.sqrt(0.5 * (A + C + math.hypot(A - C, B)))


def angular_inc_for_radius(r: Fixed, flatness: Fixed, kmax: int = DEFAULT_KMAX) -> int:
    err2 = r >> 3  # 2nd-order term
    err4 = r >> 7  # 4th-order term
    for k in range(kmax):
        if flatness >= err2 + err4:
            return k
        err2 >>= 2
        err4 >>= 4
    return kmax


def angular_inc_exact(r: float, flatness: float, kmax: int = DEFAULT_KMAX) -> int:
    for k in range(kmax):
        if chord_to_arc_exact(r, 2.0**-k) <= flatness:
            return k
    return kmax


def angular_inc(p: PointFx, q: PointFx, cfg: FlatnessConfig = FlatnessConfig()) -> int:
    """Smallest ``k`` (coarsest step) meeting the flatness, capped at ``kmax``."""
    if cfg.strict:
        r = aux_radius_exact(PointFx(*p).to_floats(), PointFx(*q).to_floats())
        return angular_inc_exact(r, cfg.flatness_px, cfg.kmax)
    return angular_inc_for_radius(aux_radius(p, q), cfg.flatness, cfg.kmax)


def kmax_for(r_max: float, delta_min: float) -> int:
    """Smallest integer ``k`` with ``k >= 1/2 log2(r_max / (8 delta_min))``."""
    if r_max <= 0 or delta_min <= 0:
        raise ValueError("r_max and delta_min must be positive")
    bound = 0.5 * math.log2(r_max / (8.0 * delta_min))
    return max(0, math.ceil(bound))
