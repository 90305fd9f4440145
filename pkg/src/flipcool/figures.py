"""Matplotlib rendering of scaling summaries to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .experiments import MODEL_PREDICTORS, ScalingFit


def save_scaling_figure(
    path,
    summary: list[dict],
    fit: ScalingFit | None = None,
    title: str | None = None,
) -> None:
    """Plot mean convergence steps against length, with error bars.

    A fitted model, when given, is drawn on a dense length grid.  Axes are
    log-log when every mean is positive, linear otherwise.
    """
    rows = sorted(summary, key=lambda row: row["n"])
    ns = np.array([row["n"] for row in rows], dtype=float)
    means = np.array([row["mean_T"] for row in rows], dtype=float)
    errs = np.array([row.get("stderr_T", 0.0) for row in rows], dtype=float)

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    ax.errorbar(ns, means, yerr=errs, fmt="o", capsize=3, label="mean steps")
    if fit is not None:
        predictor = MODEL_PREDICTORS[fit.model]
        grid = np.linspace(ns.min(), ns.max(), 200)
        ax.plot(
            grid,
            [fit.c * predictor(g) for g in grid],
            "-",
            label=f"{fit.model} fit, c = {fit.c:.4g}",
        )
    if np.all(means > 0) and ns.min() > 0:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel("word length n")
    ax.set_ylabel("mean steps to ground state")
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
