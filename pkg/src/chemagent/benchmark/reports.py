"""Report files: a summary row (Model/Node/QuestionSet/Prompt/Time/Accuracy),
per-tool accuracy, one transcript per question as JSON lines, and rendered
figures alongside the delimited output.

Transcripts intentionally omit wall-clock timing so that re-running with a
deterministic backend reproduces the file byte for byte; latencies live in
the summary and diagnostics instead.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .runner import PerToolRow, RunResult, SummaryRow

SUMMARY_HEADER = ["Model", "Node", "QuestionSet", "Prompt", "Time", "Accuracy"]


def format_minutes(minutes: float) -> str:
    return f"{minutes:.5f}".rstrip("0").rstrip(".") or "0"


def write_summary_csv(rows: list[SummaryRow], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SUMMARY_HEADER)
        for row in rows:
            writer.writerow(
                [row.model, row.node, row.question_set, row.prompt,
                 format_minutes(row.time), f"{row.accuracy:.1f}"]
            )


def read_summary_csv(path: Path) -> list[SummaryRow]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            SummaryRow(
                model=row["Model"],
                node=row["Node"],
                question_set=row["QuestionSet"],
                prompt=row["Prompt"],
                time=float(row["Time"]),
                accuracy=float(row["Accuracy"]),
            )
            for row in reader
        ]


def write_per_tool_csv(rows: list[PerToolRow], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["tool", "asked", "correct", "accuracy"])
        for row in rows:
            writer.writerow([row.tool, row.asked, row.correct, f"{row.accuracy:.1f}"])


def write_transcripts_jsonl(run_result: RunResult, path: Path) -> None:
    with open(path, "w") as fh:
        for result in sorted(run_result.results, key=lambda r: r.question.id):
            outcome = result.outcome
            record = {
                "id": result.question.id,
                "question": result.question.question,
                "gold": result.question.gold,
                "kind": result.question.kind,
                "correct": result.correct,
                "final_answer": outcome.final_answer,
                "termination": outcome.termination,
                "steps": [
                    {
                        "thought": step.thought,
                        "tool": step.action.tool,
                        "input": step.action.input,
                        "observation": step.observation,
                    }
                    for step in outcome.steps
                ],
            }
            fh.write(json.dumps(record, sort_keys=True) + "\n")


def write_reports(
    run_result: RunResult,
    summary: SummaryRow,
    per_tool: list[PerToolRow],
    out_dir: Path | str,
    figures: bool = True,
) -> dict[str, Path]:
    """Write all report files into ``out_dir`` and return their paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "summary": out / "summary.csv",
        "per_tool": out / "per_tool.csv",
        "transcripts": out / "transcripts.jsonl",
    }
    write_summary_csv([summary] if run_result.results else [], paths["summary"])
    write_per_tool_csv(per_tool, paths["per_tool"])
    write_transcripts_jsonl(run_result, paths["transcripts"])
    if figures and per_tool:
        from .figures import render_per_tool_accuracy, render_summary_scatter

        paths["per_tool_figure"] = out / "per_tool_accuracy.png"
        render_per_tool_accuracy(per_tool, paths["per_tool_figure"],
                                 title=f"{summary.model} on the {summary.question_set} set "
                                       f"({summary.prompt} prompt)")
        paths["summary_figure"] = out / "accuracy_vs_time.png"
        render_summary_scatter([summary], paths["summary_figure"])
    return paths
