"""Benchmark harness: question sets, scoring, execution, and reports."""

from .questions import (
    FULL,
    QUALITATIVE,
    QUANTITATIVE,
    SET_NAMES,
    TEMPLATES,
    BenchmarkSet,
    QuestionRecord,
    generate,
    load_molecules,
    resolve_question,
    write_questions_csv,
)
from .reports import (
    SUMMARY_HEADER,
    read_summary_csv,
    write_per_tool_csv,
    write_reports,
    write_summary_csv,
    write_transcripts_jsonl,
)
from .runner import PerToolRow, QuestionResult, RunResult, SummaryRow, run_benchmark
from .scoring import score_answer

__all__ = [
    "FULL",
    "QUALITATIVE",
    "QUANTITATIVE",
    "SET_NAMES",
    "SUMMARY_HEADER",
    "TEMPLATES",
    "BenchmarkSet",
    "PerToolRow",
    "QuestionRecord",
    "QuestionResult",
    "RunResult",
    "SummaryRow",
    "generate",
    "load_molecules",
    "read_summary_csv",
    "resolve_question",
    "run_benchmark",
    "score_answer",
    "write_per_tool_csv",
    "write_questions_csv",
    "write_reports",
    "write_summary_csv",
    "write_transcripts_jsonl",
]
