"""Parsing of model completions into agent actions.

The grammar is line-oriented with case-sensitive labels at line starts:
an optional "Thought:" line, then either an "Action:"/"Action Input:" pair
or a "Final Answer:" (which may span the rest of the text).  When both an
Action and a Final Answer appear, whichever label comes first wins.
Anything else is a ParseError value, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True)
class AgentAction:
    tool: str
    input: str

    def __post_init__(self):
        if not self.tool:
            raise ValueError("agent action requires a non-empty tool token")


@dataclass(frozen=True)
class ThoughtAction:
    thought: str
    action: AgentAction


@dataclass(frozen=True)
class Final:
    answer: str


@dataclass(frozen=True)
class ParseError:
    reason: str


ModelOutput = Union[ThoughtAction, Final, ParseError]


def _label_value(line: str, label: str) -> Optional[str]:
    if line.startswith(label):
        return line[len(label):].strip()
    return None


def parse_model_output(text: str) -> ModelOutput:
    if not isinstance(text, str) or not text.strip():
        return ParseError("empty model output")
    lines = text.splitlines()

    thought_parts: list[str] = []
    action: Optional[str] = None
    action_pos: Optional[int] = None
    final_pos: Optional[int] = None
    final_answer: Optional[str] = None
    action_input: Optional[str] = None

    for idx, line in enumerate(lines):
        stripped = line.strip()
        if (value := _label_value(stripped, "Final Answer:")) is not None and final_pos is None:
            final_pos = idx
            rest = [value] if value else []
            # a final answer may continue over the remaining lines
            for continuation in lines[idx + 1:]:
                rest.append(continuation.rstrip())
            final_answer = "\n".join(rest).strip()
            break
        if (value := _label_value(stripped, "Action:")) is not None and action is None:
            action = value
            action_pos = idx
            continue
        if (value := _label_value(stripped, "Action Input:")) is not None and action_input is None:
            action_input = value
            continue
        if (value := _label_value(stripped, "Thought:")) is not None:
            thought_parts.append(value)
            continue
        if action is None and final_pos is None and stripped:
            # unlabeled text before any recognized section becomes thought
            # context only if a Thought was already started
            if thought_parts:
                thought_parts.append(stripped)

    thought = " ".join(part for part in thought_parts if part).strip()

    if action_pos is not None and (final_pos is None or action_pos < final_pos):
        if not action:
            return ParseError("Action label present but no tool name given")
        if action_input is None:
            return ParseError("Action given without an Action Input line")
        return ThoughtAction(thought=thought, action=AgentAction(tool=action, input=action_input))
    if final_answer is not None:
        return Final(answer=final_answer)
    return ParseError("no labeled Action or Final Answer section found")
