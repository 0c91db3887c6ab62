"""Tool-use agent: prompt rendering, output parsing, backends, and the loop."""

from .backends import (
    API_KEY_ENV,
    Backend,
    BackendConfig,
    BackendError,
    BackendTimeout,
    HttpBackend,
    RuleOracleBackend,
    ScriptedBackend,
    complete,
    enforce_stop,
    make_backend,
)
from .loop import (
    ANSWERED,
    BACKEND_ERROR,
    MAX_STEPS,
    PARSE_FAILURE_LIMIT,
    AgentConfig,
    AgentOutcome,
    AgentStep,
    run,
    stream_run,
)
from .parsing import AgentAction, Final, ParseError, ThoughtAction, parse_model_output
from .prompts import (
    STRATEGIES,
    PromptTemplate,
    WrapperTokens,
    make_template,
    render_prompt,
    serialize_step,
    tool_block,
)

__all__ = [
    "ANSWERED",
    "API_KEY_ENV",
    "BACKEND_ERROR",
    "MAX_STEPS",
    "PARSE_FAILURE_LIMIT",
    "STRATEGIES",
    "AgentAction",
    "AgentConfig",
    "AgentOutcome",
    "AgentStep",
    "Backend",
    "BackendConfig",
    "BackendError",
    "BackendTimeout",
    "Final",
    "HttpBackend",
    "ParseError",
    "PromptTemplate",
    "RuleOracleBackend",
    "ScriptedBackend",
    "ThoughtAction",
    "WrapperTokens",
    "complete",
    "enforce_stop",
    "make_backend",
    "make_template",
    "parse_model_output",
    "render_prompt",
    "run",
    "serialize_step",
    "stream_run",
    "tool_block",
]
