"""Completion backends: an OpenAI-compatible HTTP client, a scripted
backend for tests, and a rule oracle that answers benchmark-style questions
perfectly (optionally with seeded qualitative noise, for calibration).

``BackendConfig`` is an immutable description; ``make_backend`` turns it
into a live backend instance (the scripted backend keeps a cursor, the HTTP
backend keeps a connection pool).  Oracle backends are stateless: every
reply is derived from the prompt alone, so concurrent runs cannot interfere.
"""

from __future__ import annotations

import logging
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Protocol

import httpx

log = logging.getLogger(__name__)

API_KEY_ENV = "CHEMAGENT_API_KEY"

QUALITATIVE_FLIP = {"Yes": "No", "No": "Yes", "High": "Low", "Low": "High",
                    "True": "False", "False": "True"}


class BackendError(RuntimeError):
    """Transport or protocol failure after exhausting retries."""


class BackendTimeout(BackendError):
    """The upstream endpoint timed out on every attempt."""


@dataclass(frozen=True)
class BackendConfig:
    kind: str = "rule_oracle"  # http_openai_compatible | scripted | rule_oracle
    endpoint_url: Optional[str] = None
    model_id: Optional[str] = None
    temperature: float = 0.0
    max_tokens: int = 256
    stop_sequences: tuple[str, ...] = ("Observation:",)
    timeout: float = 60.0
    retry_count: int = 2
    api_flavor: str = "completions"  # or "chat"
    scripted_replies: tuple[str, ...] = ()
    flip_probability: float = 0.0    # rule_oracle: chance to flip a qualitative answer
    noise_seed: int = 0

    def __post_init__(self):
        if self.kind == "http_openai_compatible" and not (self.endpoint_url and self.model_id):
            raise ValueError("http backend requires endpoint_url and model_id")
        if self.kind not in ("http_openai_compatible", "scripted", "rule_oracle"):
            raise ValueError(f"unknown backend kind {self.kind!r}")


class Backend(Protocol):
    config: BackendConfig

    def complete(self, prompt: str) -> str: ...


def enforce_stop(text: str, stop_sequences: tuple[str, ...]) -> str:
    """Client-side stop enforcement: cut at the first stop occurrence."""
    cut = len(text)
    for stop in stop_sequences:
        idx = text.find(stop)
        if idx != -1:
            cut = min(cut, idx)
    return text[:cut]


class ScriptedBackend:
    """Pops canned replies in order; exhaustion is an error."""

    def __init__(self, config: BackendConfig):
        self.config = config
        self._replies = list(config.scripted_replies)
        self._cursor = 0

    def complete(self, prompt: str) -> str:
        if self._cursor >= len(self._replies):
            raise BackendError("script exhausted")
        reply = self._replies[self._cursor]
        self._cursor += 1
        return reply


def _transcript_lines(prompt: str) -> list[str]:
    """Lines after the last "Question:" line; the instruction block above it
    contains literal Question/Observation examples that must be ignored."""
    lines = prompt.splitlines()
    last = None
    for idx, line in enumerate(lines):
        if line.startswith("Question: "):
            last = idx
    return lines if last is None else lines[last:]


def last_question(prompt: str) -> Optional[str]:
    question = None
    for line in _transcript_lines(prompt):
        if line.startswith("Question: "):
            question = line[len("Question: "):].strip()
    return question


def last_observation(prompt: str) -> Optional[str]:
    observation = None
    for line in _transcript_lines(prompt):
        if line.startswith("Observation: "):
            observation = line[len("Observation: "):].strip()
    return observation


class RuleOracleBackend:
    """Computes the correct next reply for benchmark questions.

    The resolver maps a question to (tool name, SMILES).  The first call for
    a question emits the tool action; once an observation is present in the
    prompt, the reply restates it as the final answer.  With flip_probability
    set, qualitative final answers are flipped deterministically per question.
    """

    def __init__(self, config: BackendConfig, resolver: Callable[[str], Optional[tuple[str, str]]]):
        self.config = config
        self._resolver = resolver

    def complete(self, prompt: str) -> str:
        question = last_question(prompt)
        if question is None:
            raise BackendError("rule oracle found no question in the prompt")
        observation = last_observation(prompt)
        if observation is not None:
            answer = self._maybe_flip(question, observation)
            return f"Thought: I now know the final answer\nFinal Answer: {answer}"
        resolved = self._resolver(question)
        if resolved is None:
            return f"Final Answer: I cannot map this question to a tool: {question}"
        tool, smiles = resolved
        return (
            f"Thought: I should use {tool} on the molecule\n"
            f"Action: {tool}\n"
            f"Action Input: {smiles}"
        )

    def _maybe_flip(self, question: str, answer: str) -> str:
        p = self.config.flip_probability
        if p <= 0 or answer not in QUALITATIVE_FLIP:
            return answer
        rng = random.Random(f"{self.config.noise_seed}:{question}")
        if rng.random() < p:
            return QUALITATIVE_FLIP[answer]
        return answer


class HttpBackend:
    """OpenAI-compatible completion client with retry and backoff."""

    def __init__(self, config: BackendConfig, client: httpx.Client | None = None):
        self.config = config
        self._client = client or httpx.Client(timeout=config.timeout)

    def _request(self, prompt: str) -> tuple[str, dict]:
        cfg = self.config
        base = cfg.endpoint_url.rstrip("/")
        if cfg.api_flavor == "chat":
            url = f"{base}/v1/chat/completions"
            body = {
                "model": cfg.model_id,
                "messages": [{"role": "user", "content": prompt}],
                "temperature": cfg.temperature,
                "max_tokens": cfg.max_tokens,
                "stop": list(cfg.stop_sequences),
            }
        else:
            url = f"{base}/v1/completions"
            body = {
                "model": cfg.model_id,
                "prompt": prompt,
                "temperature": cfg.temperature,
                "max_tokens": cfg.max_tokens,
                "stop": list(cfg.stop_sequences),
            }
        return url, body

    def _extract(self, payload: dict) -> str:
        try:
            choice = payload["choices"][0]
            if self.config.api_flavor == "chat":
                return choice["message"]["content"]
            return choice["text"]
        except (KeyError, IndexError, TypeError) as exc:
            raise BackendError(f"malformed completion response: {exc}") from exc

    def complete(self, prompt: str) -> str:
        url, body = self._request(prompt)
        headers = {}
        api_key = os.environ.get(API_KEY_ENV)
        if api_key:
            headers["Authorization"] = f"Bearer {api_key}"
        last_error: Exception | None = None
        for attempt in range(self.config.retry_count + 1):
            try:
                response = self._client.post(url, json=body, headers=headers)
                if response.status_code // 100 != 2:
                    raise BackendError(f"backend returned HTTP {response.status_code}")
                return self._extract(response.json())
            except (httpx.HTTPError, BackendError, ValueError) as exc:
                last_error = exc
                if attempt < self.config.retry_count:
                    delay = 0.5 * (2 ** attempt)
                    log.warning("backend attempt %d failed (%s); retrying in %.1fs",
                                attempt + 1, exc, delay)
                    time.sleep(delay)
        message = f"backend failed after {self.config.retry_count + 1} attempts: {last_error}"
        if isinstance(last_error, httpx.TimeoutException):
            raise BackendTimeout(message)
        raise BackendError(message)


def make_backend(
    config: BackendConfig,
    resolver: Callable[[str], Optional[tuple[str, str]]] | None = None,
) -> Backend:
    if config.kind == "scripted":
        return ScriptedBackend(config)
    if config.kind == "rule_oracle":
        if resolver is None:
            from ..benchmark.questions import resolve_question
            resolver = resolve_question
        return RuleOracleBackend(config, resolver)
    return HttpBackend(config)


def complete(backend: Backend, prompt: str) -> str:
    """Run one completion with client-side stop enforcement."""
    return enforce_stop(backend.complete(prompt), backend.config.stop_sequences)
