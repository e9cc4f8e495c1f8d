"""Report rendering: quiver figures, growth plots and delimited term output.

The quiver figure uses the circular layout of the matrix convention:
vertex 1 at the top, indices ascending clockwise, frozen vertices drawn as
squares.  Only net arrows are drawn (b[i][j] > 0 gives an arrow i -> j with
its multiplicity as a label), so opposite arrow pairs never appear.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .quiver import ExchangeMatrix
from .recurrence import SequenceRun


def vertex_positions(count: int, radius: float = 1.0) -> list[tuple[float, float]]:
    """Vertex 1 at the top, ascending clockwise."""
    out = []
    for i in range(count):
        angle = math.pi / 2 - 2 * math.pi * i / count
        out.append((radius * math.cos(angle), radius * math.sin(angle)))
    return out


def render_quiver(B: ExchangeMatrix, path: str | Path, title: str | None = None) -> Path:
    size = B.size
    pos = vertex_positions(size)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.set_aspect("equal")
    ax.axis("off")
    for i in range(size):
        for j in range(size):
            w = B.b[i][j]
            if w <= 0:
                continue
            src, dst = pos[i], pos[j]
            arrow = FancyArrowPatch(
                src,
                dst,
                arrowstyle="-|>",
                mutation_scale=18,
                shrinkA=14,
                shrinkB=14,
                color="tab:blue" if max(i, j) < B.n else "tab:gray",
                connectionstyle="arc3,rad=0.08",
                linewidth=1.0 + 0.6 * min(w - 1, 3),
            )
            ax.add_patch(arrow)
            if w > 1:
                mx, my = (src[0] + dst[0]) / 2, (src[1] + dst[1]) / 2
                ax.text(mx * 1.12, my * 1.12, str(w), fontsize=11, color="tab:red",
                        ha="center", va="center")
    for i, (x, y) in enumerate(pos):
        frozen = i >= B.n
        marker = "s" if frozen else "o"
        color = "lightgray" if frozen else "white"
        ax.scatter([x], [y], s=620, marker=marker, zorder=3,
                   facecolors=color, edgecolors="black")
        ax.text(x, y, str(i + 1), ha="center", va="center", zorder=4, fontsize=12)
    margin = 1.35
    ax.set_xlim(-margin, margin)
    ax.set_ylim(-margin, margin)
    if title:
        ax.set_title(title)
    path = Path(path)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path


def render_growth(run: SequenceRun, path: str | Path, title: str | None = None) -> Path:
    """Digit counts of numerators and denominators against the term index."""
    ns = range(1, len(run.terms) + 1)
    num_digits = [len(str(abs(t.numerator))) for t in run.terms]
    den_digits = [len(str(t.denominator)) for t in run.terms]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, num_digits, marker="o", markersize=3, label="numerator digits")
    if any(d > 1 for d in den_digits):
        ax.plot(ns, den_digits, marker="s", markersize=3, label="denominator digits")
    ax.set_xlabel("n")
    ax.set_ylabel("decimal digits")
    ax.legend()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_terms_csv(run: SequenceRun, path: str | Path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "numerator", "denominator"])
        for n, t in enumerate(run.terms, start=1):
            writer.writerow([n, str(t.numerator), str(t.denominator)])
    return path


def write_report(
    B: ExchangeMatrix,
    run: SequenceRun,
    out_dir: str | Path,
    label: str = "quiver",
) -> dict[str, Path]:
    """Write quiver.png, growth.png and terms.csv into out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return {
        "quiver": render_quiver(B, out / "quiver.png", title=label),
        "growth": render_growth(run, out / "growth.png", title=f"{label}: term growth"),
        "terms": write_terms_csv(run, out / "terms.csv"),
    }
