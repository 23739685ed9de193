"""Shift-and-add plotting of ellipses, elliptic arcs and hyperbolic arcs in 16.16 fixed point."""

from .conic import ImplicitConic, conjugate_from_implicit, implicit_from_conjugate
from .ellipse import ConjugateEllipse, Polyline, plot_ellipse, plot_elliptic_arc
from .errors import DegenerateGeometryError, ShiftEllipseError
from .fixed import FIX_2PI, ONE, PointFx, from_float, to_float
from .flatness import FlatnessConfig, angular_inc, aux_radius, kmax_for, vlen
from .hyperbola import ConjugateHyperbola, plot_hyperbolic_arc

__all__ = [
    "FIX_2PI",
    "ONE",
    "ConjugateEllipse",
    "ConjugateHyperbola",
    "DegenerateGeometryError",
    "FlatnessConfig",
    "ImplicitConic",
    "PointFx",
    "Polyline",
    "ShiftEllipseError",
    "angular_inc",
    "aux_radius",
    "conjugate_from_implicit",
    "from_float",
    "implicit_from_conjugate",
    "kmax_for",
    "plot_ellipse",
    "plot_elliptic_arc",
    "plot_hyperbolic_arc",
    "to_float",
    "vlen",
]
__version__ = "0.1.0"
