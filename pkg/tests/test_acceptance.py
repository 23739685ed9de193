"""Acceptance criteria, one test each, at their stated tolerances.

Every test prints a ``criterion N: PASS|FAIL`` line before asserting.  Run
``python tests/test_acceptance.py`` for the summary lines alone.  All random
suites use the pre-committed seed 2026.
"""

import subprocess
import sys
import time

import pytest

from shiftellipse import verify
from shiftellipse.flatness import kmax_for

SEED = 2026
pytestmark = pytest.mark.acceptance


def _fmt(stats):
    return ", ".join(f"{k}={v}" for k, v in sorted(stats.items()) if not isinstance(v, (dict, list)))


def c1_reversibility():
    t0 = time.perf_counter()
    r = verify.run("reversibility", 1_000_000, SEED)
    elapsed = time.perf_counter() - t0
    return r.passed and elapsed < 5.0, f"{_fmt(r.stats)}, seconds={elapsed:.2f}"


def c2_closed_form():
    r = verify.run("drift", 200, SEED)
    worst = {k: round(v["max_dev_px"] / v["bound_px"], 4) for k, v in r.stats["per_k"].items()}
    return r.passed, f"max dev/bound per k = {worst}"


def c3_radial():
    r = verify.run("radial")
    return r.passed, _fmt(r.stats)


def c4_flatness():
    r = verify.run("flatness", 200, SEED)
    return r.passed, _fmt(r.stats)


def c5_vlen_band():
    r = verify.run("vlen-band", 1_000_000, SEED)
    return r.passed, _fmt(r.stats)


def c6_auxradius_band():
    r = verify.run("auxradius-band", 100_000, SEED)
    return r.passed, _fmt(r.stats)


def c7_kmax():
    got = kmax_for(5000.0, 0.25)
    return got == 6, f"kmax_for(5000, 0.25) = {got}"


def c8_conic():
    r = verify.run("conic", 10_000, SEED)
    return r.passed, _fmt(r.stats)


def c9_matpow():
    r = verify.run("matpow", 2_000, SEED)
    return r.passed, _fmt(r.stats)


def c10_hyperbola():
    gate = verify.run("hyper-gate", 10_000, SEED)
    if not gate.passed:
        return False, f"correction gate failed: {_fmt(gate.stats)}"
    r = verify.run("hyperbola", 1_000, SEED)
    return r.passed, f"gate ok; {_fmt(r.stats)}"


DETERMINISM_RUNS = [
    ["ellipse", "--center", "200,200", "--p", "300,220", "--q", "180,290", "--flatness", "0.25"],
    ["arc", "--center", "0,0", "--p", "400,0", "--q", "100,250", "--start", "0.4", "--sweep=-2.5"],
    ["hyperbola", "--center", "0,0", "--p", "100,10", "--q", "20,60", "--sweep", "2", "--k", "5"],
    ["demo-pie"],
]


def c11_determinism():
    mismatched = []
    for args in DETERMINISM_RUNS:
        for fmt in ("svg", "csv", "json"):
            argv = [sys.executable, "-m", "shiftellipse.cli", *args, "--format", fmt]
            outs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
            if outs[0] != outs[1] or not outs[0]:
                mismatched.append(f"{args[0]}/{fmt}")
    return not mismatched, f"documents={len(DETERMINISM_RUNS) * 3}, mismatched={mismatched}"


CRITERIA = [
    (1, "exact reversibility", c1_reversibility),
    (2, "closed-form agreement", c2_closed_form),
    (3, "radial accuracy", c3_radial),
    (4, "flatness contract", c4_flatness),
    (5, "VLen error band", c5_vlen_band),
    (6, "AuxRadius error band", c6_auxradius_band),
    (7, "KMAX reproduction", c7_kmax),
    (8, "conic round trips", c8_conic),
    (9, "matrix-power oracle", c9_matpow),
    (10, "hyperbolic correctness", c10_hyperbola),
    (11, "determinism", c11_determinism),
]


def _line(num, name, passed, detail):
    return f"criterion {num} ({name}): {'PASS' if passed else 'FAIL'} [{detail}]"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(num, name, fn, capsys):
    passed, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, name, passed, detail))
    assert passed, detail


if __name__ == "__main__":
    failed = 0
    for num, name, fn in CRITERIA:
        passed, detail = fn()
        failed += not passed
        print(_line(num, name, passed, detail), flush=True)
    sys.exit(1 if failed else 0)
