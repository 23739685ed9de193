"""Error-corrected ellipse and elliptic-arc plotting.

An ellipse is described by its center and the end points P, Q of a pair of
conjugate diameters.  Points are generated by two copies of the circle
generator (one for x, one for y) after correcting the Q components with
:func:`~shiftellipse.minsky.initial_value`, so the n-th point lands on
``C + P cos(n*alpha) + Q sin(n*alpha)`` up to fixed-point truncation.

Traversal runs from P toward Q.  A full ellipse stops after
``FIX_2PI >> (16 - k)`` steps and does not repeat its first point, so the
closing edge (last point back to P) is shorter than the others.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DegenerateGeometryError, SweepRangeError
from .fixed import FIX_2PI, Fixed, PointFx, check, check_point, from_float
from .flatness import FlatnessConfig, angular_inc
from .minsky import check_k, initial_value

PointSink = Callable[[PointFx], None]


@dataclass(frozen=True)
class ConjugateEllipse:
    """Center plus center-relative conjugate diameter end points."""

    center: PointFx
    p: PointFx
    q: PointFx

    @classmethod
    def from_absolute(cls, center: PointFx, p: PointFx, q: PointFx) -> "ConjugateEllipse":
        center = PointFx(*center)
        return cls(center, PointFx(*p) - center, PointFx(*q) - center)

    @property
    def cross(self) -> int:
        return self.p.x * self.q.y - self.q.x * self.p.y

    def is_degenerate(self) -> bool:
        return self.cross == 0


@dataclass(frozen=True)
class ArcSpec:
    """Start and sweep angles (radians) on the unit-circle pre-image."""

    astart: float = 0.0
    asweep: float = 2.0 * math.pi


@dataclass
class Polyline:
    points: list[PointFx] = field(default_factory=list)
    closed: bool = False
    k: int | None = None

    def __len__(self) -> int:
        return len(self.points)

    def append(self, pt: PointFx) -> None:
        self.points.append(pt)

    def as_floats(self) -> np.ndarray:
        return np.asarray(self.points, dtype=np.int64).reshape(-1, 2) / 65536.0


def _validated(center, p, q) -> ConjugateEllipse:
    center, p, q = PointFx(*center), PointFx(*p), PointFx(*q)
    check_point(center, "center")
    check_point(p, "P")
    check_point(q, "Q")
    e = ConjugateEllipse.from_absolute(center, p, q)
    check_point(e.p, "P - center")
    check_point(e.q, "Q - center")
    if e.is_degenerate():
        raise DegenerateGeometryError("P and Q are collinear with the center")
    return e


def conjugate_rotate(p: PointFx, q: PointFx, phi: float) -> tuple[PointFx, PointFx]:
    """Conjugate pair (P', Q') of the same ellipse with P' at angle ``phi``."""
    c, s = math.cos(phi), math.sin(phi)
    p2 = PointFx(int(p[0] * c + q[0] * s), int(p[1] * c + q[1] * s))
    q2 = PointFx(int(q[0] * c - p[0] * s), int(q[1] * c - p[1] * s))
    return p2, q2


def arc_endpoint(p: PointFx, q: PointFx, asweep: float) -> PointFx:
    c, s = math.cos(asweep), math.sin(asweep)
    return PointFx(int(p[0] * c + q[0] * s), int(p[1] * c + q[1] * s))


def ellipse_core(e: ConjugateEllipse, sweep: Fixed, k: int, sink: PointSink) -> int:
    """Emit the start point then ``sweep >> (16 - k)`` corrected steps.

    Works on any inputs, including collinear P and Q (the curve collapses to
    a segment).  Returns the number of steps taken.
    """
    check_k(k)
    if sweep < 0:
        raise SweepRangeError("sweep must be nonnegative")
    xC, yC = e.center
    xP, yP = e.p
    xQ, yQ = e.q
    count = sweep >> (16 - k)

    sink(PointFx(check(xP + xC), check(yP + yC)))
    xQ = initial_value(xQ, xP, k)
    yQ = initial_value(yQ, yP, k)
    for _ in range(count):
        xQ -= xP >> k
        xP += xQ >> k
        yQ -= yP >> k
        yP += yQ >> k
        sink(PointFx(check(xP + xC), check(yP + yC)))
    return count


def _choose_k(e: ConjugateEllipse, k: int | None, cfg: FlatnessConfig) -> int:
    return angular_inc(e.p, e.q, cfg) if k is None else check_k(k)


def plot_ellipse(
    center: PointFx,
    p: PointFx,
    q: PointFx,
    k: int | None = None,
    cfg: FlatnessConfig = FlatnessConfig(),
) -> Polyline:
    """Closed polyline through the ellipse, starting at P and heading toward Q.

    ``p`` and ``q`` are absolute (window) coordinates.  When ``k`` is None it
    is chosen from ``cfg``.
    """
    e = _validated(center, p, q)
    k = _choose_k(e, k, cfg)
    out = Polyline(closed=True, k=k)
    ellipse_core(e, FIX_2PI, k, out.append)
    return out


def plot_elliptic_arc(
    center: PointFx,
    p: PointFx,
    q: PointFx,
    astart: float,
    asweep: float,
    k: int | None = None,
    cfg: FlatnessConfig = FlatnessConfig(),
) -> Polyline:
    """Open polyline along an arc; angles are radians, positive toward Q.

    The last plotted point is the exact arc end.  A zero sweep yields the
    start point alone.
    """
    if not (math.isfinite(astart) and math.isfinite(asweep)):
        raise SweepRangeError("arc angles must be finite")
    if abs(asweep) > 2.0 * math.pi:
        raise SweepRangeError(f"|sweep| = {abs(asweep)} exceeds 2*pi")
    e = _validated(center, p, q)
    xy_p, xy_q = e.p, e.q
    if astart != 0:
        xy_p, xy_q = conjugate_rotate(xy_p, xy_q, astart)
    if asweep < 0:
        xy_q = -xy_q
        asweep = -asweep
    arc = ConjugateEllipse(e.center, xy_p, xy_q)
    if arc.is_degenerate():
        raise DegenerateGeometryError("start rotation collapsed the conjugate pair")
    k = _choose_k(arc, k, cfg)

    out = Polyline(closed=False, k=k)
    ellipse_core(arc, from_float(asweep), k, out.append)
    if asweep != 0:
        end = arc_endpoint(xy_p, xy_q, asweep) + e.center
        out.append(PointFx(check(end.x), check(end.y)))
    return out


def polyline_parameters(n_steps: int, k: int, astart: float = 0.0, direction: float = 1.0) -> np.ndarray:
    """Unit-circle angles of the points emitted by :func:`ellipse_core`."""
    alpha = 2.0 * math.asin(0.5 * 2.0**-k)
    return astart + direction * alpha * np.arange(n_steps + 1)
