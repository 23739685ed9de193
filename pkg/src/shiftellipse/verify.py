"""Measurement suites behind ``shiftellipse verify``.

Every suite takes a sample count and a seed, returns a JSON-ready report
(``suite``, ``pass``, ``stats``) and, separately, raw series for figures.
Oracles are the double-precision models in :mod:`shiftellipse.refmodel`,
:mod:`shiftellipse.minsky` and :mod:`shiftellipse.conic`; none of them
reuse the fixed-point code they check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import conic
from .ellipse import ConjugateEllipse, plot_ellipse
from .fixed import ONE, PointFx, from_float, to_float
from .flatness import (
    FlatnessConfig,
    aux_radius_array,
    kmax_for,
    vlen_array,
)
from .hyperbola import hyperbola_parameters, plot_hyperbolic_arc, validate_correction
from .minsky import (
    GenState,
    circle_step_forward,
    circle_step_reverse,
    closed_form_circle,
    hyper_step_forward,
    hyper_step_reverse,
    initial_value,
    mat2_pow,
)
from .refmodel import max_chord_deviation

VLEN_BAND = (-0.028, 0.0078)
VLEN_SLACK = 0.0005
AUX_BAND = (-0.042, 0.071)
FLATNESS_FACTOR = 1.10
STRICT_FLATNESS_FACTOR = 1.001


@dataclass
class Report:
    suite: str
    passed: bool
    stats: dict
    series: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "pass": bool(self.passed), "stats": self.stats}


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def reversibility(samples: int = 1_000_000, seed: int = 2026) -> Report:
    """reverse(forward(s)) == s bit for bit, circle and hyperbola pairs."""
    rng = _rng(seed)
    lim = 1 << 30
    u = rng.integers(-lim, lim, samples, dtype=np.int64)
    v = rng.integers(-lim, lim, samples, dtype=np.int64)
    k = rng.integers(0, 16, samples, dtype=np.int64)
    s = GenState(u, v)
    back_c = circle_step_reverse(circle_step_forward(s, k), k)
    back_h = hyper_step_reverse(hyper_step_forward(s, k), k)
    bad_c = int(np.count_nonzero((back_c.u != u) | (back_c.v != v)))
    bad_h = int(np.count_nonzero((back_h.u != u) | (back_h.v != v)))
    return Report(
        "reversibility",
        bad_c == 0 and bad_h == 0,
        {"cases": samples, "circle_mismatches": bad_c, "hyperbola_mismatches": bad_h},
    )


def drift(samples: int = 200, seed: int = 2026, ks=range(2, 7)) -> Report:
    """Corrected circle generator vs. its closed form over one revolution."""
    rng = _rng(seed)
    per_k = {}
    ok = True
    trace = {}
    for k in ks:
        eps = 2.0**-k
        n = int(2.0 * math.pi * 2**k)
        bound = n * 2.0**-15
        worst = 0.0
        worst_curve = None
        for _ in range(samples):
            u0, v0 = rng.uniform(-4096.0, 4096.0, 2)
            ru, rv = from_float(float(u0)), from_float(float(v0))
            s = GenState(initial_value(ru, rv, k), rv)
            fu, fv = to_float(ru), to_float(rv)
            U0 = fu * math.sqrt(1.0 - 0.25 * eps * eps) + 0.5 * eps * fv
            devs = []
            for i in range(1, n + 1):
                s = circle_step_forward(s, k)
                cu, cv = closed_form_circle(U0, fv, eps, i)
                devs.append(max(abs(s.u / ONE - cu), abs(s.v / ONE - cv)))
            m = max(devs)
            if m > worst:
                worst, worst_curve = m, devs
        per_k[str(k)] = {"steps": n, "max_dev_px": worst, "bound_px": bound}
        trace[k] = worst_curve
        ok = ok and worst <= bound
    return Report("drift", ok, {"cases_per_k": samples, "per_k": per_k}, {"worst_trace": trace})


def radial(radius: float = 1000.0, flatness: float = 0.25, tol: float = 0.1) -> Report:
    c = PointFx.from_floats(2000.0, 2000.0)
    pl = plot_ellipse(
        c,
        PointFx.from_floats(2000.0 + radius, 2000.0),
        PointFx.from_floats(2000.0, 2000.0 + radius),
        cfg=FlatnessConfig.from_pixels(flatness),
    )
    pts = pl.as_floats() - np.array(c.to_floats())
    err = np.abs(np.hypot(pts[:, 0], pts[:, 1]) - radius)
    return Report(
        "radial",
        float(err.max()) <= tol,
        {"radius_px": radius, "k": pl.k, "points": len(pl), "max_radial_error_px": float(err.max()), "tol_px": tol},
        {"radial_error": err},
    )


def random_conjugate_pair(rng: np.random.Generator, rmin: float, rmax: float):
    """Conjugate pair of a random ellipse at a random phase (floats, px)."""
    a = rng.uniform(rmin, rmax)
    b = a * rng.uniform(0.05, 1.0)
    rot, phi = rng.uniform(0.0, 2.0 * math.pi, 2)
    c, s = math.cos(rot), math.sin(rot)

    def img(u, v):
        return (c * a * u - s * b * v, s * a * u + c * b * v)

    return img(math.cos(phi), math.sin(phi)), img(-math.sin(phi), math.cos(phi))


def flatness(samples: int = 200, seed: int = 2026, flatnesses=(0.1, 0.25, 1.0)) -> Report:
    """Measured chord gaps against the requested flatness, default and strict."""
    rng = _rng(seed)
    kmax = kmax_for(4000.0, min(flatnesses))
    worst = {"estimate": 0.0, "strict": 0.0}
    ratios = {"estimate": [], "strict": []}
    for _ in range(samples):
        p, q = random_conjugate_pair(rng, 10.0, 4000.0)
        cx, cy = rng.uniform(-4000.0, 4000.0, 2)
        c = PointFx.from_floats(cx, cy)
        pa = PointFx.from_floats(cx + p[0], cy + p[1])
        qa = PointFx.from_floats(cx + q[0], cy + q[1])
        e = ConjugateEllipse.from_absolute(c, pa, qa)
        for f in flatnesses:
            for mode, strict in (("estimate", False), ("strict", True)):
                cfg = FlatnessConfig.from_pixels(f, kmax, strict)
                pl = plot_ellipse(c, pa, qa, cfg=cfg)
                d = max_chord_deviation(pl, e.p.to_floats(), e.q.to_floats(), c.to_floats())
                ratios[mode].append(d / f)
                worst[mode] = max(worst[mode], d / f)
    ok = worst["estimate"] <= FLATNESS_FACTOR and worst["strict"] <= STRICT_FLATNESS_FACTOR
    return Report(
        "flatness",
        ok,
        {
            "ellipses": samples,
            "kmax": kmax,
            "max_ratio": worst["estimate"],
            "max_ratio_strict": worst["strict"],
            "limit": FLATNESS_FACTOR,
            "limit_strict": STRICT_FLATNESS_FACTOR,
        },
        {"ratios": {k: np.array(v) for k, v in ratios.items()}},
    )


def vlen_band(samples: int = 1_000_000, seed: int = 2026) -> Report:
    rng = _rng(seed)
    ang = rng.uniform(0.0, 2.0 * math.pi, samples)
    length = rng.uniform(1.0, 16000.0, samples)
    x = np.trunc(length * np.cos(ang) * ONE).astype(np.int64)
    y = np.trunc(length * np.sin(ang) * ONE).astype(np.int64)
    rel = vlen_array(x, y) / np.hypot(x, y) - 1.0
    lo, hi = float(rel.min()), float(rel.max())
    ok = lo >= VLEN_BAND[0] - VLEN_SLACK and hi <= VLEN_BAND[1] + VLEN_SLACK
    return Report(
        "vlen-band",
        ok,
        {"cases": samples, "min_rel_error": lo, "max_rel_error": hi,
         "band": list(VLEN_BAND), "slack": VLEN_SLACK},
        {"rel_error": rel, "angle": ang},
    )


def auxradius_band(samples: int = 100_000, seed: int = 2026) -> Report:
    rng = _rng(seed)
    a = rng.uniform(10.0, 4000.0, samples)
    b = a * rng.uniform(0.05, 1.0, samples)
    rot = rng.uniform(0.0, 2.0 * math.pi, samples)
    phi = rng.uniform(0.0, 2.0 * math.pi, samples)
    c, s = np.cos(rot), np.sin(rot)

    def img(u, v):
        return c * a * u - s * b * v, s * a * u + c * b * v

    px, py = img(np.cos(phi), np.sin(phi))
    qx, qy = img(-np.sin(phi), np.cos(phi))
    raw = [np.trunc(z * ONE).astype(np.int64) for z in (px, py, qx, qy)]
    est = aux_radius_array(*raw)
    fx = [z.astype(float) for z in raw]
    A = fx[1] ** 2 + fx[3] ** 2
    B = -2.0 * (fx[0] * fx[1] + fx[2] * fx[3])
    C = fx[0] ** 2 + fx[2] ** 2
    exact = np.sqrt(0.5 * (A + C + np.hypot(A - C, B)))
    rel = est / exact - 1.0
    lo, hi = float(rel.min()), float(rel.max())
    worst = int(np.argmin(rel))
    return Report(
        "auxradius-band",
        lo >= AUX_BAND[0] and hi <= AUX_BAND[1],
        {
            "cases": samples,
            "min_rel_error": lo,
            "max_rel_error": hi,
            "band": list(AUX_BAND),
            "below_band": int(np.count_nonzero(rel < AUX_BAND[0])),
            "worst_pair_px": [float(fx[i][worst] / ONE) for i in range(4)],
        },
        {"rel_error": rel},
    )


def kmax(r_max: float = 5000.0, delta_min: float = 0.25) -> Report:
    got = kmax_for(r_max, delta_min)
    bound = 0.5 * math.log2(r_max / (8.0 * delta_min))
    return Report("kmax", got == 6, {"r_max": r_max, "delta_min": delta_min, "bound": bound, "kmax": got})


def conic_roundtrip(samples: int = 10_000, seed: int = 2026) -> Report:
    rng = _rng(seed)
    worst_form = 0.0
    worst_delta = 0.0
    worst_center = 0.0
    for _ in range(samples):
        p, q = random_conjugate_pair(rng, 1.0, 4000.0)
        c1 = conic.implicit_from_conjugate(p, q)
        worst_delta = max(worst_delta, abs(conic.calibration_number(c1) - 1.0))
        p2, q2 = conic.conjugate_from_implicit(c1)
        c2 = conic.implicit_from_conjugate(p2, q2)
        worst_form = max(worst_form, _form_distance(c1, c2))

        x0, y0 = rng.uniform(-4000.0, 4000.0, 2)
        moved = conic.implicit_from_conjugate_at((x0, y0), p, q)
        back, center = conic.translate_to_origin(moved)
        scale = max(abs(x0), abs(y0), 1.0)
        worst_center = max(worst_center, abs(center.x - x0) / scale, abs(center.y - y0) / scale,
                           _form_distance(back, c1))
    ok = worst_form <= 1e-9 and worst_delta <= 1e-12 and worst_center <= 1e-9
    return Report(
        "conic",
        ok,
        {"cases": samples, "max_form_rel": worst_form, "max_calibration_dev": worst_delta,
         "max_center_rel": worst_center},
    )


def _form_distance(c1: conic.ImplicitConic, c2: conic.ImplicitConic) -> float:
    v1 = np.array(c1.coefficients())
    v2 = np.array(c2.coefficients())
    return float(np.max(np.abs(v1 / np.linalg.norm(v1) - v2 / np.linalg.norm(v2))))


def matpow(samples: int = 2_000, seed: int = 2026, nmax: int = 20) -> Report:
    rng = _rng(seed)
    worst = 0.0
    exact01 = True
    for _ in range(samples):
        while True:
            m = rng.uniform(-1.5, 1.5, (2, 2))
            tr, det = np.trace(m), np.linalg.det(m)
            if abs(tr * tr - 4.0 * det) > 1e-3:
                break
        ml = m.tolist()
        exact01 &= mat2_pow(ml, 0) == [[1, 0], [0, 1]]
        exact01 &= mat2_pow(ml, 1) == ml
        naive = np.eye(2)
        for n in range(1, nmax + 1):
            naive = naive @ m
            got = np.array(mat2_pow(ml, n))
            scale = max(np.abs(naive).max(), 1e-300)
            worst = max(worst, float(np.abs(got - naive).max() / scale))
    return Report("matpow", exact01 and worst <= 1e-9,
                  {"cases": samples, "nmax": nmax, "max_rel": worst, "identity_checks_exact": bool(exact01)})


def hyper_gate(samples: int = 10_000, seed: int = 2026) -> Report:
    stats = validate_correction(samples, seed)
    ok = (stats["closed_form_max_rel"] <= 1e-9 and stats["corrected_max_rel"] <= 1e-9
          and stats["initial_value_max_raw_error"] < 2.0)
    return Report("hyper-gate", ok, stats)


def hyperbola(samples: int = 1_000, seed: int = 2026, max_sweep: float = 8.0) -> Report:
    """Corrected hyperbolic arcs vs. the cosh/sinh oracle, bound n * 2**-15 px."""
    rng = _rng(seed)
    worst_ratio = 0.0
    failures = 0
    sweeps, ratios = [], []
    for _ in range(samples):
        k = int(rng.integers(2, 7))
        sweep = float(rng.uniform(-max_sweep, max_sweep))
        # keep the whole arc inside the coordinate range
        reach = 15000.0 / math.cosh(sweep) / 2.0
        size = rng.uniform(0.05, 1.0) * min(reach, 4000.0)
        p = rng.uniform(-1.0, 1.0, 2) * size
        q = rng.uniform(-1.0, 1.0, 2) * size
        pf, qf = PointFx.from_floats(*p), PointFx.from_floats(*q)
        if pf.x * qf.y - qf.x * pf.y == 0:
            continue
        pl = plot_hyperbolic_arc(PointFx(0, 0), pf, qf, 0.0, sweep, k)
        pts = pl.as_floats()[:-1]
        n = len(pts) - 1
        th = hyperbola_parameters(n, k, 0.0, 1.0 if sweep >= 0 else -1.0)
        (xp, yp), (xq, yq) = pf.to_floats(), qf.to_floats()
        ex = np.stack([xp * np.cosh(th) + xq * np.sinh(th), yp * np.cosh(th) + yq * np.sinh(th)], 1)
        dev = float(np.abs(pts - ex).max())
        ratio = dev / (max(n, 1) * 2.0**-15)
        sweeps.append(sweep)
        ratios.append(ratio)
        worst_ratio = max(worst_ratio, ratio)
        failures += ratio > 1.0
    return Report(
        "hyperbola",
        failures == 0,
        {"cases": len(ratios), "max_dev_over_bound": worst_ratio, "cases_over_bound": failures,
         "max_sweep": max_sweep},
        {"sweep": np.array(sweeps), "ratio": np.array(ratios)},
    )


SUITES: dict[str, Callable[..., Report]] = {
    "reversibility": reversibility,
    "drift": drift,
    "radial": radial,
    "flatness": flatness,
    "vlen-band": vlen_band,
    "auxradius-band": auxradius_band,
    "kmax": kmax,
    "conic": conic_roundtrip,
    "matpow": matpow,
    "hyper-gate": hyper_gate,
    "hyperbola": hyperbola,
}

# suites whose size is fixed by their definition
UNSIZED = {"radial", "kmax"}


def run(name: str, samples: int | None = None, seed: int = 2026) -> Report:
    fn = SUITES[name]
    if name in UNSIZED:
        return fn()
    kwargs = {"seed": seed}
    if samples is not None:
        kwargs["samples"] = samples
    return fn(**kwargs)
