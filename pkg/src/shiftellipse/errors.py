"""Exception types shared across the package.

The CLI maps :class:`DegenerateGeometryError` to exit status 3 and every
other :class:`ShiftEllipseError` to exit status 2.
"""


class ShiftEllipseError(ValueError):
    """Base class. ``code`` is the machine-readable tag printed by the CLI."""

    code = "invalid"


class FixedRangeError(ShiftEllipseError):
    code = "fixed-range"


class FixedOverflowError(ShiftEllipseError, OverflowError):
    code = "fixed-overflow"


class DegenerateGeometryError(ShiftEllipseError):
    code = "degenerate"


class SweepRangeError(ShiftEllipseError):
    code = "sweep-range"


class EmptyArcError(ShiftEllipseError):
    code = "empty-arc"


class NotAnEllipseError(ShiftEllipseError):
    code = "not-an-ellipse"


class NotCenteredError(ShiftEllipseError):
    code = "not-centered"


class UncalibratedError(ShiftEllipseError):
    code = "uncalibrated"


class ConicSignError(ShiftEllipseError):
    """A > 0 and F < 0 are required to pick the real conjugate pair."""

    code = "conic-sign"
