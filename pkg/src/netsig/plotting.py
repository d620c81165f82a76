"""Figure rendering for the CLI report paths (written to files, never shown)."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

__all__ = ["plot_curves", "plot_sequence"]


def plot_curves(
    path: str,
    series: Sequence[tuple[str, np.ndarray, np.ndarray]],
    xlabel: str = "t",
    ylabel: str = "reliability",
    title: str = "",
) -> None:
    """Render one or more (label, x, y) line series to an image file."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for label, xs, ys in series:
        ax.plot(xs, ys, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    if len(series) > 1:
        ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_sequence(
    path: str,
    values: Sequence[float],
    start_index: int = 0,
    xlabel: str = "k",
    ylabel: str = "value",
    title: str = "",
) -> None:
    """Render an indexed sequence as a marker plot to an image file."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    xs = np.arange(start_index, start_index + len(values))
    ax.plot(xs, values, marker="o", linestyle="-")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
