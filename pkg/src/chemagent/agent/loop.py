"""The tool-use loop: render the prompt, complete, parse, execute, repeat.

Each iteration costs one backend call.  Tool actions (including unknown
tools and bad SMILES, which come back as error observations) consume a step
toward max_steps; malformed replies consume the parse-retry budget and
inject a corrective observation instead.  All failure modes terminate with
a named reason rather than raising.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from ..toolbox import ToolRegistry, invoke
from .backends import Backend, BackendConfig, BackendError, complete, make_backend
from .parsing import AgentAction, Final, ParseError, ThoughtAction, parse_model_output
from .prompts import PromptTemplate, make_template, render_prompt

ANSWERED = "answered"
MAX_STEPS = "max_steps"
PARSE_FAILURE_LIMIT = "parse_failure_limit"
BACKEND_ERROR = "backend_error"

PARSE_RETRY_OBSERVATION = (
    "Your response was not in the expected format. Reply with 'Action: <tool>' "
    "followed by 'Action Input: <input>', or 'Final Answer: <answer>'."
)
INVALID_FORMAT_TOOL = "invalid_format"


@dataclass(frozen=True)
class AgentStep:
    thought: str
    action: AgentAction
    observation: str


@dataclass(frozen=True)
class AgentOutcome:
    final_answer: Optional[str]
    steps: tuple[AgentStep, ...]
    termination: str
    wall_time: float

    def __post_init__(self):
        if (self.termination == ANSWERED) != (self.final_answer is not None):
            raise ValueError("final_answer must be present exactly when answered")


@dataclass(frozen=True)
class AgentConfig:
    max_steps: int = 5
    parse_retry_limit: int = 2
    prompt: PromptTemplate = field(default_factory=make_template)
    backend: BackendConfig = field(default_factory=BackendConfig)
    data_dir: Optional[str] = None

    def __post_init__(self):
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")


def stream_run(
    question: str,
    cfg: AgentConfig,
    registry: ToolRegistry,
    backend: Backend | None = None,
):
    """Generator form of the loop: yields ("step", AgentStep) as each tool
    call completes, then exactly one ("final", AgentOutcome)."""
    if backend is None:
        backend = make_backend(cfg.backend)
    start = time.monotonic()
    steps: list[AgentStep] = []
    tool_steps = 0
    parse_failures = 0

    def outcome(answer: Optional[str], termination: str) -> AgentOutcome:
        return AgentOutcome(
            final_answer=answer,
            steps=tuple(steps),
            termination=termination,
            wall_time=time.monotonic() - start,
        )

    while tool_steps < cfg.max_steps:
        prompt = render_prompt(cfg.prompt, registry, question, steps, data_dir=cfg.data_dir)
        try:
            text = complete(backend, prompt)
        except BackendError:
            yield ("final", outcome(None, BACKEND_ERROR))
            return
        parsed = parse_model_output(text)
        if isinstance(parsed, Final):
            yield ("final", outcome(parsed.answer, ANSWERED))
            return
        if isinstance(parsed, ThoughtAction):
            result = invoke(registry, parsed.action.tool, parsed.action.input)
            step = AgentStep(
                thought=parsed.thought, action=parsed.action, observation=result.text
            )
            steps.append(step)
            tool_steps += 1
            yield ("step", step)
            continue
        # ParseError: burn one retry and show the model what went wrong
        parse_failures += 1
        if parse_failures >= cfg.parse_retry_limit:
            yield ("final", outcome(None, PARSE_FAILURE_LIMIT))
            return
        condensed = " / ".join(line.strip() for line in text.splitlines() if line.strip())
        step = AgentStep(
            thought=condensed[:200],
            action=AgentAction(tool=INVALID_FORMAT_TOOL, input=""),
            observation=PARSE_RETRY_OBSERVATION,
        )
        steps.append(step)
        yield ("step", step)
    yield ("final", outcome(None, MAX_STEPS))


def run(
    question: str,
    cfg: AgentConfig,
    registry: ToolRegistry,
    backend: Backend | None = None,
) -> AgentOutcome:
    """Answer one question through the loop; always terminates within
    max_steps backend calls plus the parse-retry budget."""
    final: Optional[AgentOutcome] = None
    for kind, payload in stream_run(question, cfg, registry, backend):
        if kind == "final":
            final = payload
    assert final is not None
    return final
