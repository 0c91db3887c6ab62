"""Benchmark execution: run every question through the agent loop with a
bounded worker pool, score the answers, and aggregate per-tool accuracy.

Each question gets its own backend instance (scripted backends replay their
reply list per question; oracle backends are stateless), so per-question
results are independent of the parallelism level.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from ..agent import AgentConfig, AgentOutcome, Backend, BACKEND_ERROR, make_backend, run
from ..toolbox import ToolRegistry, default_registry
from .questions import BenchmarkSet, QuestionRecord
from .scoring import score_answer


@dataclass(frozen=True)
class QuestionResult:
    question: QuestionRecord
    correct: bool
    outcome: AgentOutcome
    latency: float


@dataclass(frozen=True)
class RunResult:
    set_name: str
    results: tuple[QuestionResult, ...]

    @property
    def accuracy(self) -> float:
        if not self.results:
            return 0.0
        return 100.0 * sum(r.correct for r in self.results) / len(self.results)

    @property
    def backend_errors(self) -> int:
        return sum(1 for r in self.results if r.outcome.termination == BACKEND_ERROR)


@dataclass(frozen=True)
class SummaryRow:
    model: str
    node: str
    question_set: str
    prompt: str
    time: float      # minutes
    accuracy: float  # percent

    def __post_init__(self):
        if not (0.0 <= self.accuracy <= 100.0):
            raise ValueError("accuracy must be a percentage")
        if self.time <= 0:
            raise ValueError("time must be positive")


@dataclass(frozen=True)
class PerToolRow:
    tool: str
    asked: int
    correct: int

    @property
    def accuracy(self) -> float:
        return 100.0 * self.correct / self.asked if self.asked else 0.0


PROMPT_LABELS = {"minimal": "Minimal", "domain": "Full"}


def run_benchmark(
    benchmark_set: BenchmarkSet,
    agent_cfg: AgentConfig,
    parallelism: int = 1,
    model_label: str = "unknown",
    node_label: str = "local",
    registry: ToolRegistry | None = None,
    backend_factory: Optional[Callable[[], Backend]] = None,
) -> tuple[RunResult, SummaryRow, list[PerToolRow]]:
    registry = registry or default_registry(agent_cfg.data_dir)
    factory = backend_factory or (lambda: make_backend(agent_cfg.backend))

    def one(question: QuestionRecord) -> QuestionResult:
        started = time.monotonic()
        outcome = run(question.question, agent_cfg, registry, backend=factory())
        correct = score_answer(outcome.final_answer, question.gold, question.kind)
        return QuestionResult(
            question=question,
            correct=correct,
            outcome=outcome,
            latency=time.monotonic() - started,
        )

    wall_start = time.monotonic()
    if parallelism <= 1:
        results = [one(q) for q in benchmark_set.questions]
    else:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(one, benchmark_set.questions))
    wall_minutes = max((time.monotonic() - wall_start) / 60.0, 1e-9)

    run_result = RunResult(set_name=benchmark_set.name, results=tuple(results))
    summary = SummaryRow(
        model=model_label,
        node=node_label,
        question_set=benchmark_set.name.capitalize(),
        prompt=PROMPT_LABELS.get(agent_cfg.prompt.strategy, agent_cfg.prompt.strategy),
        time=wall_minutes,
        accuracy=run_result.accuracy,
    )

    per_tool: dict[str, list[int]] = {}
    for result in results:
        bucket = per_tool.setdefault(result.question.tool, [0, 0])
        bucket[0] += 1
        bucket[1] += int(result.correct)
    tool_order = [t.name for t in registry if t.name in per_tool]
    per_tool_rows = [
        PerToolRow(tool=name, asked=per_tool[name][0], correct=per_tool[name][1])
        for name in tool_order
    ]
    return run_result, summary, per_tool_rows
