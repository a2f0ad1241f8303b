"""Matplotlib renderings written next to the CLI's text reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .partitions import Partition, transpose  # noqa: E402

CELL_FACE = {"pi": "#9ecae1", "sigma": "#fdae6b", "ap": "#d9d9d9"}


def draw_young(ax, lam: Partition, title: str, face: str = "#9ecae1") -> None:
    """English-convention Young diagram: row ``i`` has ``lam[i]`` cells."""
    for i, length in enumerate(lam):
        for j in range(length):
            ax.add_patch(Rectangle((j, -i - 1), 1, 1, facecolor=face, edgecolor="k", lw=0.8))
    width = max(lam[0], 1)
    height = max(len(lam), 1)
    ax.set_xlim(-0.2, width + 0.2)
    ax.set_ylim(-height - 0.2, 0.2)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_title(title, fontsize=10)


def save_pair_figure(report, path: str | Path) -> Path:
    """SL2-types of both parameters, with the coordinatewise gap underneath."""
    path = Path(path)
    fig = plt.figure(figsize=(9, 5))
    grid = fig.add_gridspec(2, 2, height_ratios=[3, 2])
    draw_young(fig.add_subplot(grid[0, 0]), report.sl2_pi, f"TP(pi) = {report.sl2_pi}", CELL_FACE["pi"])
    draw_young(fig.add_subplot(grid[0, 1]), report.sl2_sigma, f"TP(sigma) = {report.sl2_sigma}", CELL_FACE["sigma"])

    ax = fig.add_subplot(grid[1, :])
    n = max(len(report.sl2_pi), len(report.sl2_sigma), 1)
    xs = range(1, n + 1)
    gaps = [abs(report.sl2_pi[i] - report.sl2_sigma[i]) for i in range(n)]
    colors = ["#31a354" if g <= 1 else "#de2d26" for g in gaps]
    ax.bar(xs, gaps, color=colors)
    ax.axhline(1, ls="--", color="k", lw=0.8)
    ax.set_xlabel("i")
    ax.set_ylabel("|TP(pi)_i - TP(sigma)_i|")
    ax.set_xticks(list(xs))
    verdict = "relevant" if report.relevant else "irrelevant"
    closeness = "close" if report.close else "not close"
    fig.suptitle(f"{report.pi}  vs  {report.sigma}\n{verdict}, {closeness}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_type_figure(p, lam: Partition, path: str | Path) -> Path:
    """SL2-type and its transpose (the associated partition) side by side."""
    path = Path(path)
    ap = transpose(lam)
    fig, (left, right) = plt.subplots(1, 2, figsize=(7, 4))
    draw_young(left, lam, f"TP = {lam}", CELL_FACE["pi"])
    draw_young(right, ap, f"AP = TP^t = {ap}", CELL_FACE["ap"])
    fig.suptitle(str(p), fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_selftest_figure(summary, path: str | Path) -> Path:
    """Violation counts per invariant, annotated with the pair totals."""
    path = Path(path)
    names = list(summary.violations)
    counts = [summary.violations[k] for k in names]
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(names, counts, color=["#de2d26" if c else "#31a354" for c in counts])
    ax.set_ylabel("violations")
    ax.set_ylim(0, max(counts + [1]) * 1.2)
    ax.tick_params(axis="x", rotation=30)
    ax.set_title(
        f"{summary.pairs} pairs, {summary.relevant} relevant, "
        f"{summary.generic_pairs} generic x generic",
        fontsize=10,
    )
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
