"""Matplotlib figures written next to the CLI documents."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .render import Curve  # noqa: E402
from .verify import Report  # noqa: E402

FIGSIZE = (6.4, 4.8)
DPI = 120


def _save(fig, path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=DPI, metadata={"Software": None})
    plt.close(fig)


def curves_figure(curves: list[Curve], path, title: str = "") -> None:
    """Plotted points and chords, drawn with y pointing down like the SVG."""
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for c in curves:
        pts = c.polyline.as_floats()
        if c.hub is not None:
            hub = np.asarray(c.hub, dtype=float)[None, :] / 65536.0
            pts = np.vstack([hub, pts, hub])
        elif c.polyline.closed:
            pts = np.vstack([pts, pts[:1]])
        ax.plot(pts[:, 0], pts[:, 1], "-", lw=0.8, color="k")
        ax.plot(pts[:, 0], pts[:, 1], ".", ms=2.5, color="tab:red")
    ax.set_aspect("equal")
    ax.invert_yaxis()
    ax.set_xlabel("x (px)")
    ax.set_ylabel("y (px)")
    if title:
        ax.set_title(title)
    _save(fig, path)


def _band_hist(ax, rel, band, label):
    ax.hist(100.0 * rel, bins=200, color="0.4")
    for b in band:
        ax.axvline(100.0 * b, color="tab:red", ls="--", lw=1)
    ax.set_xlabel(f"{label} relative error (%)")
    ax.set_ylabel("count")


def report_figure(report: Report, path) -> None:
    """One diagnostic plot per suite; suites without series get a text card."""
    fig, ax = plt.subplots(figsize=FIGSIZE)
    s = report.series
    name = report.suite
    if name == "vlen-band":
        _band_hist(ax, s["rel_error"], report.stats["band"], "VLen")
    elif name == "auxradius-band":
        _band_hist(ax, s["rel_error"], report.stats["band"], "AuxRadius")
    elif name == "drift":
        for k, trace in sorted(s["worst_trace"].items()):
            n = np.arange(1, len(trace) + 1)
            ax.plot(n, trace, lw=0.8, label=f"k={k}")
            ax.plot(n, n * 2.0**-15, lw=0.6, ls=":", color="0.5")
        ax.set_xlabel("step n")
        ax.set_ylabel("max |fixed - closed form| (px)")
        ax.set_yscale("log")
        ax.legend(fontsize=8)
    elif name == "flatness":
        for mode, r in s["ratios"].items():
            ax.hist(r, bins=60, alpha=0.6, label=mode)
        ax.axvline(report.stats["limit"], color="tab:red", ls="--", lw=1)
        ax.set_xlabel("measured chord gap / flatness")
        ax.set_ylabel("count")
        ax.legend(fontsize=8)
    elif name == "radial":
        ax.plot(s["radial_error"], lw=0.8)
        ax.set_xlabel("point index")
        ax.set_ylabel("| |p - c| - r | (px)")
    elif name == "hyperbola":
        ax.semilogy(np.abs(s["sweep"]), s["ratio"], ".", ms=3)
        ax.axhline(1.0, color="tab:red", ls="--", lw=1)
        ax.set_xlabel("|sweep| (hyperbolic angle)")
        ax.set_ylabel("max deviation / (n 2^-15 px)")
    else:
        ax.axis("off")
        text = "\n".join(f"{k}: {v}" for k, v in sorted(report.stats.items()))
        ax.text(0.02, 0.98, text, va="top", family="monospace", fontsize=8)
    ax.set_title(f"{name}: {'PASS' if report.passed else 'FAIL'}")
    _save(fig, path)
