"""Figure rendering for report output.

Uses the non-interactive Agg backend so figures can be written headlessly.
Each figure carries a footnote with the generating configuration, keeping
the image self-describing alongside its CSV/JSON companions.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import __version__
from .report import canonical_json

__all__ = ["monotone_figure", "scan_figure", "trajectory_figure"]

_DPI = 150


def _footnote(fig, config: dict) -> None:
    text = f"driftlab {__version__} | {canonical_json(config)}"
    if len(text) > 220:
        text = text[:217] + "..."
    fig.text(0.01, 0.005, text, fontsize=4.5, color="0.45", family="monospace")


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def trajectory_figure(
    trajectories: Sequence[Sequence[tuple[int, int]]],
    config: dict,
    path: str | Path,
) -> Path:
    """Step plot of the ones-count of the current point over time."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    for traj in trajectories:
        if not traj:
            continue
        ts = [t for t, _ in traj]
        ones = [o for _, o in traj]
        ax.step(ts, ones, where="post", linewidth=0.9, alpha=0.8)
    ax.set_xlabel("iteration")
    ax.set_ylabel("ones in current point")
    ax.set_title("optimization trajectories")
    ax.grid(True, alpha=0.3)
    fig.tight_layout(rect=(0, 0.03, 1, 1))
    _footnote(fig, config)
    return _finish(fig, path)


def scan_figure(
    cs: Sequence[float],
    margins: Sequence[float],
    verdicts: Sequence[bool],
    config: dict,
    path: str | Path,
) -> Path:
    """Certificate margin (lower - upper) against the mutation parameter."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.axhline(0.0, color="0.3", linewidth=0.8)
    ax.plot(cs, margins, marker="o", markersize=3, linewidth=1.0, color="tab:blue")
    certified = [c for c, v in zip(cs, verdicts) if v]
    if certified:
        ax.scatter(
            certified,
            [m for m, v in zip(margins, verdicts) if v],
            color="tab:green",
            s=18,
            zorder=3,
            label="certified",
        )
        ax.legend(loc="best", fontsize=8)
    ax.set_xlabel("mutation parameter c")
    ax.set_ylabel("lower bound - upper bound")
    ax.set_title("certificate scan")
    ax.grid(True, alpha=0.3)
    fig.tight_layout(rect=(0, 0.03, 1, 1))
    _footnote(fig, config)
    return _finish(fig, path)


def monotone_figure(
    positions: Sequence[int],
    probabilities: Sequence[float],
    stderrs: Sequence[float],
    config: dict,
    path: str | Path,
) -> Path:
    """Per-position zero probability with 2-sigma error bars."""
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.errorbar(
        positions,
        probabilities,
        yerr=[2.0 * s for s in stderrs],
        fmt="o",
        markersize=3,
        linewidth=0.8,
        capsize=2,
        color="tab:purple",
    )
    ax.set_xlabel("bit position (1 = lowest weight)")
    ax.set_ylabel("P(bit = 0)")
    ax.set_title("per-position convergence")
    ax.grid(True, alpha=0.3)
    fig.tight_layout(rect=(0, 0.03, 1, 1))
    _footnote(fig, config)
    return _finish(fig, path)
