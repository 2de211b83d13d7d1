"""Matplotlib figures for coefficient sequences, row shapes and suite reports.

All functions write a file and close their figure; nothing is shown on screen.
"""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import shape  # noqa: E402
from .suites import Report  # noqa: E402

PLATEAU_COLOUR = "#c0392b"
BAR_COLOUR = "#34495e"


def _save(fig, path: str | os.PathLike) -> str:
    path = os.fspath(path)
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)
    return path


def plot_coefficients(p: Sequence[int], path, title: str | None = None, window: int | None = None) -> str:
    """Bar chart of the coefficients, peak plateau highlighted.

    ``window`` restricts the plot to that many degrees either side of the centre.
    """
    N = len(p) - 1
    lo, hi = 0, N
    if window is not None:
        lo, hi = max(0, N // 2 - window), min(N, (N + 1) // 2 + window)
    top = max(p)
    xs = list(range(lo, hi + 1))
    colours = [PLATEAU_COLOUR if p[i] == top else BAR_COLOUR for i in xs]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.28 * len(xs)), 3.2))
    ax.bar(xs, [p[i] for i in xs], color=colours, width=0.8)
    ax.set_xlabel("power of q")
    ax.set_ylabel("coefficient")
    if title:
        ax.set_title(title)
    if window is not None:
        for i in xs:
            ax.annotate(str(p[i]), (i, p[i]), ha="center", va="bottom", fontsize=7)
    return _save(fig, path)


def plot_rows(profile: shape.ShapeProfile, path, title: str | None = None) -> str:
    """Draw the row decomposition: row i spans degrees i..N-i at height i."""
    fig, ax = plt.subplots(figsize=(6, 0.35 * (len(profile.rows) + 2) + 1))
    for i, b in enumerate(profile.rows):
        style = dict(color=BAR_COLOUR, lw=4) if b else dict(color="0.8", lw=1, ls=":")
        ax.plot([i, profile.N - i], [i, i], **style)
        if b > 1:
            ax.annotate(f"x{b}", (profile.N - i, i), xytext=(4, -3), textcoords="offset points", fontsize=7)
    ax.set_xlim(-0.5, profile.N + 1.5)
    ax.set_ylabel("row height")
    ax.set_xlabel("power of q")
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_report(report: Report, path) -> str:
    s = report.summary()
    fig, ax = plt.subplots(figsize=(4, 2.4))
    ax.barh(["passed", "failed"], [s["passed"], s["failed"]], color=["#27ae60", PLATEAU_COLOUR])
    ax.set_title(f"{report.suite}: {s['passed']}/{s['total']} cases")
    return _save(fig, path)


def plot_gaussian_tops(pairs: Sequence[tuple[int, int]], path, window: int = 4) -> str:
    """Small multiples of the central coefficients of several Gaussian polynomials."""
    from .qcalc import gauss

    cols = min(3, len(pairs)) or 1
    rows = (len(pairs) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 2.4 * rows), squeeze=False)
    for ax, (m, n) in zip(axes.flat, pairs):
        p = gauss(m, n)
        N = len(p) - 1
        xs = list(range(N // 2 - window, (N + 1) // 2 + window + 1))
        top = max(p)
        ax.bar(xs, [p[i] for i in xs], color=[PLATEAU_COLOUR if p[i] == top else BAR_COLOUR for i in xs])
        ax.set_ylim(min(p[i] for i in xs) * 0.95, top * 1.02)
        ax.set_title(f"gauss({m},{n})", fontsize=9)
        ax.tick_params(labelsize=7)
    for ax in list(axes.flat)[len(pairs):]:
        ax.axis("off")
    fig.tight_layout()
    return _save(fig, path)
