"""Double-precision reference model used as the oracle for the fixed-point paths."""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DegenerateGeometryError


class RealPoint(NamedTuple):
    x: float
    y: float


def ellipse_point(p, q, theta: float) -> RealPoint:
    c, s = math.cos(theta), math.sin(theta)
    return RealPoint(p[0] * c + q[0] * s, p[1] * c + q[1] * s)


def hyperbola_point(p, q, t: float) -> RealPoint:
    c, s = math.cosh(t), math.sinh(t)
    return RealPoint(p[0] * c + q[0] * s, p[1] * c + q[1] * s)


def conjugate_rotate_real(p, q, phi: float) -> tuple[RealPoint, RealPoint]:
    c, s = math.cos(phi), math.sin(phi)
    return (
        RealPoint(p[0] * c + q[0] * s, p[1] * c + q[1] * s),
        RealPoint(q[0] * c - p[0] * s, q[1] * c - p[1] * s),
    )


def hyper_rotate_real(p, q, phi: float) -> tuple[RealPoint, RealPoint]:
    c, s = math.cosh(phi), math.sinh(phi)
    return (
        RealPoint(p[0] * c + q[0] * s, p[1] * c + q[1] * s),
        RealPoint(q[0] * c + p[0] * s, q[1] * c + p[1] * s),
    )


def chord_to_arc_exact(r: float, eps: float) -> float:
    """Sagitta of a chord of length ``r * eps`` on a circle of radius ``r``."""
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must lie in (0, 1]")
    q = 0.25 * eps * eps
    # 1 - sqrt(1 - q) without cancellation
    return r * q / (1.0 + math.sqrt(1.0 - q))


def chord_to_arc_series(r: float, eps: float) -> float:
    """The same sagitta truncated after the 4th-order term."""
    e2 = eps * eps
    return r * (e2 / 8.0 + e2 * e2 / 128.0)


def curve_parameters(points, center, p, q) -> np.ndarray:
    """Recover the unit-circle angle of each point on the ellipse (unwrapped)."""
    pts = np.asarray(points, dtype=float) - np.asarray(center, dtype=float)
    det = p[0] * q[1] - q[0] * p[1]
    if det == 0.0:
        raise DegenerateGeometryError("cannot invert a degenerate ellipse map")
    # inverse of [[xP, xQ], [yP, yQ]]
    u = (q[1] * pts[:, 0] - q[0] * pts[:, 1]) / det
    v = (-p[1] * pts[:, 0] + p[0] * pts[:, 1]) / det
    return np.unwrap(np.arctan2(v, u))


def max_chord_deviation(
    points: Sequence,
    p,
    q,
    center=(0.0, 0.0),
    closed: bool = False,
    thetas: Sequence[float] | None = None,
    samples: int = 64,
) -> float:
    """Largest distance from the true ellipse to the chords of a polyline.

    ``points`` may be a :class:`~shiftellipse.ellipse.Polyline`, in which case
    its own closed flag applies.  Each chord joins two adjacent plotted
    points; the true curve between their parameter values is sampled at
    ``samples`` interior points and measured against the line through the
    chord.  Parameter values are recovered from the points when ``thetas``
    is not given.
    """
    if hasattr(points, "points"):
        closed = closed or points.closed
        points = points.as_floats()
    pts = np.asarray(points, dtype=float)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    if thetas is None:
        th = curve_parameters(pts, center, p, q)
    else:
        th = np.asarray(thetas, dtype=float)
        if len(th) != len(pts):
            raise ValueError("thetas and points differ in length")
    if closed:
        pts = np.vstack([pts, pts[:1]])
        # closing edge advances to the start point one revolution on
        direction = 1.0 if th[-1] >= th[0] else -1.0
        th = np.append(th, th[0] + direction * 2.0 * math.pi)

    a, b = pts[:-1], pts[1:]
    t = np.linspace(0.0, 1.0, samples + 2)[1:-1]
    ts = th[:-1, None] + (th[1:] - th[:-1])[:, None] * t[None, :]
    cx = center[0] + p[0] * np.cos(ts) + q[0] * np.sin(ts)
    cy = center[1] + p[1] * np.cos(ts) + q[1] * np.sin(ts)
    dx = (b[:, 0] - a[:, 0])[:, None]
    dy = (b[:, 1] - a[:, 1])[:, None]
    length = np.hypot(dx, dy)
    cross = dx * (cy - a[:, 1, None]) - dy * (cx - a[:, 0, None])
    with np.errstate(invalid="ignore", divide="ignore"):
        dist = np.where(
            length > 0,
            np.abs(cross) / np.where(length > 0, length, 1.0),
            np.hypot(cx - a[:, 0, None], cy - a[:, 1, None]),
        )
    return float(dist.max())


def signed_area(points) -> float:
    """Shoelace area; positive when the traversal is counterclockwise (y up)."""
    pts = np.asarray(points, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
