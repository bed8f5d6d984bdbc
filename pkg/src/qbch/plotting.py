"""Figures for simulation reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.family": "serif",
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "qbch",
}

COLORS = {"success": "#4c72b0", "failure": "#dd8452", "miscorrection": "#c44e52"}


def plot_outcomes(reports, path, title: str | None = None):
    """Stacked outcome fractions per injected error count; one bar per report."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.0, 2.6))
        xs = [r.errors for r in reports]
        bottom = [0.0] * len(reports)
        for name, attr in (("success", "successes"), ("failure", "failures"),
                           ("miscorrection", "miscorrections")):
            vals = [getattr(r, attr) / r.trials if r.trials else 0.0 for r in reports]
            ax.bar(xs, vals, bottom=bottom, color=COLORS[name], label=name, width=0.6)
            bottom = [b + v for b, v in zip(bottom, vals)]
        ax.set_xlabel("block errors per word")
        ax.set_ylabel("fraction of trials")
        ax.set_ylim(0, 1.0)
        ax.set_xticks(xs)
        if title:
            ax.set_title(title)
        ax.legend(loc="lower left", frameon=False)
        fig.tight_layout()
        # no timestamps, so reruns give identical bytes
        fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png")
                    else {"Date": None})
        plt.close(fig)
