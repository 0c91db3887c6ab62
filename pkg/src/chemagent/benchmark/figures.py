"""Figure rendering for benchmark reports.

Two plots accompany the delimited output: per-tool accuracy bars for one
run, and an accuracy-versus-time scatter across summary rows (useful when
comparing models, prompts, or hardware labels from accumulated summaries).
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .runner import PerToolRow, SummaryRow


def render_per_tool_accuracy(rows: list[PerToolRow], path: Path | str, title: str = "") -> None:
    fig, ax = plt.subplots(figsize=(10, 4.5))
    names = [row.tool for row in rows]
    values = [row.accuracy for row in rows]
    bars = ax.bar(range(len(rows)), values, color="#4c8dbf")
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(names, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("accuracy (%)")
    ax.set_ylim(0, 105)
    ax.bar_label(bars, fmt="%.0f", fontsize=7)
    if title:
        ax.set_title(title)
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_summary_scatter(rows: list[SummaryRow], path: Path | str) -> None:
    fig, ax = plt.subplots(figsize=(7, 5))
    markers = {"Full": "o", "Minimal": "s"}
    for row in rows:
        ax.scatter(
            row.time,
            row.accuracy,
            marker=markers.get(row.prompt, "D"),
            s=60,
            alpha=0.8,
        )
        ax.annotate(
            f"{row.model}/{row.question_set}",
            (row.time, row.accuracy),
            textcoords="offset points",
            xytext=(6, 4),
            fontsize=7,
        )
    ax.set_xlabel("time (minutes)")
    ax.set_ylabel("accuracy (%)")
    ax.set_ylim(-5, 105)
    ax.set_title("accuracy vs. execution time")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
