import math

import pytest

from shiftellipse.errors import FixedOverflowError, FixedRangeError
from shiftellipse.fixed import (
    FIX_2PI,
    ONE,
    PointFx,
    check,
    check_coord,
    format_fixed,
    from_float,
    shr,
    to_float,
)


@pytest.mark.parametrize(
    "value, raw",
    [(1.0, 65536), (-0.5, -32768), (2 * math.pi, 411774), (0.0, 0)],
)
def test_from_float(value, raw):
    assert from_float(value) == raw


def test_from_float_truncates_toward_zero():
    assert from_float(-1.5 / ONE) == -1
    assert from_float(1.5 / ONE) == 1


def test_fix_2pi_is_rounded():
    assert FIX_2PI == round(2 * math.pi * ONE) == 411775


@pytest.mark.parametrize("bad", [32768.0, -32768.5, float("nan"), float("inf")])
def test_from_float_range(bad):
    with pytest.raises(FixedRangeError):
        from_float(bad)


@pytest.mark.parametrize("x, k, out", [(65536, 3, 8192), (-1, 1, -1), (7, 1, 3), (-7, 1, -4)])
def test_shr_is_floor(x, k, out):
    assert shr(x, k) == out


def test_shr_rejects_bad_shift():
    with pytest.raises(ValueError):
        shr(1, 32)
    with pytest.raises(ValueError):
        shr(1, -1)


def test_check_overflow():
    assert check(2**31 - 1) == 2**31 - 1
    with pytest.raises(FixedOverflowError):
        check(2**31)
    with pytest.raises(OverflowError):
        check(-(2**31) - 1)


def test_coord_limit():
    check_coord(from_float(16000.0))
    with pytest.raises(FixedRangeError):
        check_coord(from_float(20000.0))


def test_round_trip_and_format():
    assert to_float(from_float(3.25)) == 3.25
    assert format_fixed(from_float(-2.5)) == "-2.5000"
    p = PointFx.from_floats(1.0, -2.0)
    assert p == (65536, -131072)
    assert (p + p) == PointFx(131072, -262144)
    assert (p - p) == PointFx(0, 0)
    assert -p == PointFx(-65536, 131072)
    assert p.to_floats() == (1.0, -2.0)
