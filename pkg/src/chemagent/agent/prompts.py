"""Prompt rendering for the tool-use loop.

Two strategies ship as text assets: ``minimal`` (stock instructions plus the
tool descriptions, nothing else) and ``domain`` (a chemistry-aligned preamble
describing the typical answering steps).  Both share the same tool block and
format rules; model-specific wrapper tokens come from ``model_tokens.tsv``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..assets import read_table, resolve_asset
from ..toolbox import ToolRegistry

STRATEGIES = ("minimal", "domain")


@dataclass(frozen=True)
class WrapperTokens:
    prefix: str = ""
    cue: str = ""


@dataclass(frozen=True)
class PromptTemplate:
    strategy: str = "domain"
    model_family: str = "default"
    wrapper: WrapperTokens = field(default_factory=WrapperTokens)

    def preamble(self, data_dir: str | None = None) -> str:
        return _strategy_text(self.strategy, data_dir)


@lru_cache(maxsize=None)
def _strategy_text(strategy: str, data_dir: str | None = None) -> str:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown prompt strategy {strategy!r}; expected one of {STRATEGIES}")
    return resolve_asset(f"prompts/{strategy}.txt", data_dir).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _token_map(data_dir: str | None = None) -> dict[str, WrapperTokens]:
    rows = read_table(resolve_asset("prompts/model_tokens.tsv", data_dir), 3)
    out = {}
    for model, prefix, cue in rows:
        out[model] = WrapperTokens(
            prefix=prefix.replace("\\n", "\n"), cue=cue.replace("\\n", "\n")
        )
    return out


def make_template(
    strategy: str = "domain", model_family: str = "default", data_dir: str | None = None
) -> PromptTemplate:
    tokens = _token_map(data_dir)
    wrapper = tokens.get(model_family) or tokens.get("default") or WrapperTokens()
    _strategy_text(strategy, data_dir)  # validate early
    return PromptTemplate(strategy=strategy, model_family=model_family, wrapper=wrapper)


def tool_block(registry: ToolRegistry) -> str:
    return "\n".join(f"{tool.name}: {tool.description}" for tool in registry)


def serialize_step(step) -> str:
    """One transcript exchange, exactly as it is replayed into the prompt."""
    return (
        f"Thought: {step.thought}\n"
        f"Action: {step.action.tool}\n"
        f"Action Input: {step.action.input}\n"
        f"Observation: {step.observation}\n"
    )


def render_prompt(
    template: PromptTemplate,
    registry: ToolRegistry,
    question: str,
    history: list = (),
    data_dir: str | None = None,
) -> str:
    """Deterministic prompt text: wrapper prefix, preamble with the tool
    block spliced in, the question, the model cue, the serialized history,
    and the trailing "Thought:" the model continues from."""
    if not len(registry):
        raise ValueError("cannot render a prompt over an empty tool registry")
    body = template.preamble(data_dir).format(
        tools=tool_block(registry),
        tool_names=", ".join(registry.names()),
    )
    parts = [template.wrapper.prefix, body, f"\nQuestion: {question}\n", template.wrapper.cue]
    for step in history:
        parts.append(serialize_step(step))
    parts.append("Thought:")
    return "".join(parts)
