"""Command-line front end.

    shiftellipse ellipse   --center 200,200 --p 300,200 --q 200,300 --flatness 0.25
    shiftellipse arc       --center ... --p ... --q ... --start 0.5 --sweep 2.0 --k 4
    shiftellipse hyperbola --center ... --p ... --q ... --sweep 1.5 --k 4
    shiftellipse convert   --json '{"A": 1, "B": 0, "C": 1, "F": -1}'
    shiftellipse verify    vlen-band --figure vlen.png
    shiftellipse demo-pie  --format svg

Negative coordinates need the ``--p=-3,4`` spelling so argparse does not
read them as flags.  Exit status: 0 ok, 1 verification failed, 2 invalid
input, 3 degenerate geometry.  Errors go to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import conic, verify
from .ellipse import Polyline, plot_ellipse, plot_elliptic_arc
from .errors import DegenerateGeometryError, EmptyArcError, ShiftEllipseError
from .fixed import PointFx, to_float
from .flatness import DEFAULT_FLATNESS, DEFAULT_KMAX, FlatnessConfig, aux_radius
from .hyperbola import plot_hyperbolic_arc
from .render import Curve, render

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_DEGENERATE = 3

DEFAULTS = {"flatness": DEFAULT_FLATNESS, "kmax": DEFAULT_KMAX, "strict_flatness": False}


class UsageError(ShiftEllipseError):
    code = "usage"


@dataclass
class RenderRequest:
    shape: str
    center: PointFx
    p: PointFx
    q: PointFx
    start: float = 0.0
    sweep: float | None = None
    flatness: float | None = None
    k: int | None = None
    kmax: int = DEFAULT_KMAX
    strict: bool = False
    fmt: str = "svg"

    def __post_init__(self):
        if self.flatness is not None and self.k is not None:
            raise UsageError("give either a flatness or an explicit k, not both")

    def config(self) -> FlatnessConfig:
        return FlatnessConfig.from_pixels(
            DEFAULT_FLATNESS if self.flatness is None else self.flatness, self.kmax, self.strict
        )


def parse_point(text: str) -> PointFx:
    try:
        xs, ys = text.split(",")
        return PointFx.from_floats(float(xs), float(ys))
    except ValueError as exc:
        if isinstance(exc, ShiftEllipseError):
            raise
        raise UsageError(f"expected X,Y but got {text!r}") from None


def _shape_meta(req: RenderRequest, pl: Polyline) -> dict:
    rel_p, rel_q = req.p - req.center, req.q - req.center
    meta = {
        "shape": req.shape,
        "center": list(req.center.to_floats()),
        "p": list(req.p.to_floats()),
        "q": list(req.q.to_floats()),
        "k": pl.k,
        "points": len(pl),
    }
    if req.shape != "hyperbola":
        r = aux_radius(rel_p, rel_q)
        meta["aux_radius"] = to_float(r)
        meta["aux_radius_raw"] = r
        meta["k_source"] = "explicit" if req.k is not None else "flatness"
        if req.k is None:
            meta["flatness"] = req.config().flatness_px
            meta["kmax"] = req.kmax
            meta["strict_flatness"] = req.strict
    if req.shape != "ellipse":
        meta["start"] = req.start
        meta["sweep"] = req.sweep
    return meta


def build_curves(req: RenderRequest) -> tuple[list[Curve], dict]:
    if req.shape == "ellipse":
        pl = plot_ellipse(req.center, req.p, req.q, k=req.k, cfg=req.config())
    elif req.shape == "arc":
        if req.sweep is None:
            raise UsageError("arc needs --sweep")
        if req.sweep == 0:
            raise EmptyArcError("a zero sweep draws no arc")
        pl = plot_elliptic_arc(req.center, req.p, req.q, req.start, req.sweep, k=req.k, cfg=req.config())
    elif req.shape == "hyperbola":
        if req.k is None:
            raise UsageError("hyperbola needs an explicit --k (no flatness control)")
        if req.sweep is None:
            raise UsageError("hyperbola needs --sweep")
        if req.sweep == 0:
            raise EmptyArcError("a zero sweep draws no arc")
        pl = plot_hyperbolic_arc(req.center, req.p, req.q, req.start, req.sweep, req.k)
    else:
        raise UsageError(f"unknown shape {req.shape!r}")
    meta = _shape_meta(req, pl)
    return [Curve(req.shape, pl)], meta


def cmd_shape(req: RenderRequest) -> str:
    curves, meta = build_curves(req)
    return render(curves, req.fmt, meta)


PIE_PLACEMENTS = [
    ((360.0, 130.0), (100.0, 0.0), (0.0, -100.0)),
    ((130.0, 130.0), (110.0, 0.0), (0.0, -60.0)),
    ((590.0, 130.0), (60.0, 0.0), (0.0, -100.0)),
    ((130.0, 390.0), (70.0, -30.0), (25.0, -60.0)),
    ((360.0, 390.0), (80.0, 0.0), (40.0, -70.0)),
    ((590.0, 390.0), (75.0, 20.0), (-25.0, -70.0)),
]
PIE_WEDGES = [(0.0, 1.3), (1.3, 2.1), (3.4, 1.6), (5.0, 2.0 * math.pi - 5.0)]


def build_pie(flatness: float | None = None, k: int | None = None, kmax: int = DEFAULT_KMAX,
              strict: bool = False) -> tuple[list[Curve], dict]:
    """Six affine placements of one pie chart; every wedge shares its angles."""
    cfg = FlatnessConfig.from_pixels(DEFAULT_FLATNESS if flatness is None else flatness, kmax, strict)
    curves = []
    for i, (c, p, q) in enumerate(PIE_PLACEMENTS):
        cf = PointFx.from_floats(*c)
        pf = PointFx.from_floats(c[0] + p[0], c[1] + p[1])
        qf = PointFx.from_floats(c[0] + q[0], c[1] + q[1])
        rp, rq = pf - cf, qf - cf
        frame = Polyline([cf + rp + rq, cf - rp + rq, cf - rp - rq, cf + rp - rq], closed=True)
        curves.append(Curve(f"frame-{i}", frame))
        for j, (start, sweep) in enumerate(PIE_WEDGES):
            pl = plot_elliptic_arc(cf, pf, qf, start, sweep, k=k, cfg=cfg)
            curves.append(Curve(f"pie-{i}-wedge-{j}", pl, {"start": start, "sweep": sweep}, hub=tuple(cf)))
    meta = {
        "shape": "demo-pie",
        "wedges": [list(w) for w in PIE_WEDGES],
        "placements": [[list(c), list(p), list(q)] for c, p, q in PIE_PLACEMENTS],
        "k_source": "explicit" if k is not None else "flatness",
    }
    if k is None:
        meta["flatness"] = cfg.flatness_px
    return curves, meta


def _no_negative_zero(obj):
    if isinstance(obj, float):
        return obj + 0.0
    if isinstance(obj, dict):
        return {k: _no_negative_zero(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_no_negative_zero(v) for v in obj]
    return obj


def cmd_convert(data: dict, strict: bool = False) -> dict:
    """Implicit coefficients <-> center plus center-relative conjugate pair."""
    keys = {str(k).lower() for k in data}
    if {"p", "q"} <= keys:
        center = data.get("center", [0.0, 0.0])
        c = conic.implicit_from_conjugate_at(center, data["p"], data["q"])
        return _no_negative_zero({"implicit": c.to_dict(), "calibration_number": 1.0})
    if {"a", "c"} <= keys:
        c = conic.ImplicitConic.from_dict(data)
        centered, center = conic.translate_to_origin(c)
        delta = conic.calibration_number(centered)
        p, q = conic.conjugate_from_implicit(centered, strict=strict)
        return _no_negative_zero({
            "center": [center.x, center.y],
            "p": [p.x, p.y],
            "q": [q.x, q.y],
            "calibration_number": delta,
            "aux_radius": conic.aux_radius_from_implicit(conic.calibrate(centered)),
        })
    raise UsageError("input must hold A..F coefficients or center/p/q")


def load_config(path: str | None) -> dict:
    cfg = dict(DEFAULTS)
    if path:
        try:
            with open(path) as fh:
                user = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        unknown = set(user) - set(DEFAULTS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(user)
    return cfg


def _add_common(sp: argparse.ArgumentParser, geometry: bool = True) -> None:
    if geometry:
        sp.add_argument("--center", required=True, type=parse_point, metavar="X,Y")
        sp.add_argument("--p", required=True, type=parse_point, metavar="X,Y")
        sp.add_argument("--q", required=True, type=parse_point, metavar="X,Y")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--flatness", type=float, help="max chord gap in px")
    group.add_argument("--k", type=int, help="explicit step exponent, eps = 2**-k")
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--strict-flatness", action="store_true", default=None,
                    help="exact auxiliary radius and exact sagitta test")
    sp.add_argument("--format", choices=["svg", "csv", "json"], default="svg")
    sp.add_argument("--config", help="JSON file with flatness / kmax / strict_flatness")
    sp.add_argument("--output", "-o", help="write the document here instead of stdout")
    sp.add_argument("--figure", help="also render a PNG figure to this path")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shiftellipse", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ellipse", help="plot a full ellipse")
    _add_common(sp)
    for name, help_ in (("arc", "plot an elliptic arc"), ("hyperbola", "plot a hyperbolic arc")):
        sp = sub.add_parser(name, help=help_)
        _add_common(sp)
        sp.add_argument("--start", type=float, default=0.0, help="start angle (radians)")
        sp.add_argument("--sweep", type=float, required=True, help="sweep angle (radians)")

    sp = sub.add_parser("demo-pie", help="six affine placements of one pie chart")
    _add_common(sp, geometry=False)

    sp = sub.add_parser("convert", help="implicit coefficients <-> conjugate diameters (JSON)")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--json", help="inline JSON input")
    src.add_argument("--input", help="JSON file, or - for stdin")
    sp.add_argument("--strict-calibration", action="store_true",
                    help="reject coefficients whose calibration number is not 1")
    sp.add_argument("--output", "-o")

    sp = sub.add_parser("verify", help="run a measurement suite and report JSON")
    sp.add_argument("suite", choices=sorted(verify.SUITES))
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=2026)
    sp.add_argument("--output", "-o")
    sp.add_argument("--figure")
    return ap


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve(args) -> tuple[float | None, int, bool]:
    cfg = load_config(args.config)
    kmax = args.kmax if args.kmax is not None else int(cfg["kmax"])
    strict = args.strict_flatness if args.strict_flatness is not None else bool(cfg["strict_flatness"])
    flatness = args.flatness
    if flatness is None and args.k is None:
        flatness = float(cfg["flatness"])
    return flatness, kmax, strict


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command

    if cmd in ("ellipse", "arc", "hyperbola"):
        flatness, kmax, strict = _resolve(args)
        if cmd == "hyperbola":
            flatness = None if args.k is not None else flatness
        req = RenderRequest(
            shape=cmd, center=args.center, p=args.p, q=args.q,
            start=getattr(args, "start", 0.0), sweep=getattr(args, "sweep", None),
            flatness=flatness, k=args.k, kmax=kmax, strict=strict, fmt=args.format,
        )
        curves, meta = build_curves(req)
        _emit(render(curves, args.format, meta), args.output)
        if args.figure:
            from .plotting import curves_figure

            curves_figure(curves, args.figure, title=cmd)
        return EXIT_OK

    if cmd == "demo-pie":
        flatness, kmax, strict = _resolve(args)
        curves, meta = build_pie(flatness, args.k, kmax, strict)
        _emit(render(curves, args.format, meta), args.output)
        if args.figure:
            from .plotting import curves_figure

            curves_figure(curves, args.figure, title="pie charts")
        return EXIT_OK

    if cmd == "convert":
        try:
            if args.json is not None:
                data = json.loads(args.json)
            elif args.input == "-":
                data = json.load(sys.stdin)
            else:
                data = json.loads(Path(args.input).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read JSON input: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("JSON input must be an object")
        out = cmd_convert(data, strict=args.strict_calibration)
        _emit(json.dumps(out, sort_keys=True, indent=1) + "\n", args.output)
        return EXIT_OK

    if cmd == "verify":
        report = verify.run(args.suite, args.samples, args.seed)
        _emit(json.dumps(report.to_dict(), sort_keys=True, indent=1) + "\n", args.output)
        if args.figure:
            from .plotting import report_figure

            report_figure(report, args.figure)
        return EXIT_OK if report.passed else EXIT_VERIFY_FAILED

    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except DegenerateGeometryError as exc:
        status = EXIT_DEGENERATE
        err = exc
    except ShiftEllipseError as exc:
        status = EXIT_INVALID
        err = exc
    sys.stderr.write(json.dumps({"error": err.code, "message": str(err)}, sort_keys=True) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
