"""Render curve tables to PNG with matplotlib (Agg backend, no display needed)."""
from __future__ import annotations

from typing import Sequence

import numpy as np


def plot_curves(header: Sequence[str], rows: np.ndarray, path: str, title: str = "") -> str:
    """Plot every value column of ``rows`` against the first column; returns ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = np.asarray(rows, dtype=float)
    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=100)
    styles = ["-", "--", ":", "-."]
    for j, name in enumerate(header[1:], start=1):
        ax.plot(rows[:, 0], rows[:, j], styles[(j - 1) % len(styles)], label=name)
    ax.set_xlabel(header[0])
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    # fixed metadata keeps the file byte-stable
    fig.savefig(path, format="png", metadata={"Software": None})
    plt.close(fig)
    return path
