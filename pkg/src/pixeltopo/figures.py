"""Matplotlib rendering of class maps to figure files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.patches import Patch

from .netpbm import DEFAULT_PALETTE, Palette
from .topo import PointClass


def save_classification_figure(
    classmap: list[list[PointClass]],
    path,
    palette: Palette | None = None,
    title: str | None = None,
    dpi: int = 150,
) -> None:
    """Render a class map with a legend of the classes present and save it.

    The output format follows the file extension (PNG, PDF, SVG, ...).
    """
    if palette is None:
        palette = DEFAULT_PALETTE
    height = len(classmap)
    width = len(classmap[0])
    rgb = np.array(
        [[palette[cls] for cls in row] for row in classmap], dtype=float
    ) / 255.0
    present = [cls for cls in PointClass if any(cls in row for row in classmap)]

    fig, ax = plt.subplots(figsize=(6.0, max(2.0, 6.0 * height / width)))
    ax.imshow(rgb, interpolation="nearest")
    ax.set_xticks([])
    ax.set_yticks([])
    if title:
        ax.set_title(title)
    handles = [
        Patch(facecolor=np.array(palette[cls]) / 255.0, edgecolor="0.2", label=cls.value)
        for cls in present
    ]
    ax.legend(handles=handles, loc="center left", bbox_to_anchor=(1.02, 0.5), frameon=False)
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
