"""HTTP service: question answering (one-shot and streaming), bulk
property description, and tool listing.

Streaming uses server-sent events with named events ``step``, ``final``, and
``error``; concatenating a stream's step events plus its final event yields
exactly the non-streaming response for the same backend script.  Requests
are stateless: each builds a fresh agent run over immutable shared assets.
"""

from __future__ import annotations

import json
import logging
from typing import Callable, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse, StreamingResponse
from pydantic import BaseModel, Field

from .. import __version__
from ..agent import ANSWERED, BACKEND_ERROR, Backend, BackendTimeout, make_backend, run, stream_run
from ..molkit import SmilesError, parse_smiles
from ..toolbox import default_registry, invoke
from .config import AppConfig

log = logging.getLogger(__name__)


class AskRequest(BaseModel):
    question: str = Field(min_length=1)
    prompt_strategy: Optional[str] = None


class DescribeRequest(BaseModel):
    smiles: str = Field(min_length=1)


class StepView(BaseModel):
    thought: str
    tool: str
    input: str
    observation: str


class AskResponse(BaseModel):
    answer: Optional[str]
    steps: list[StepView]
    timing_ms: float
    termination: str


def _step_view(step) -> StepView:
    return StepView(
        thought=step.thought,
        tool=step.action.tool,
        input=step.action.input,
        observation=step.observation,
    )


def _sse(event: str, payload: dict) -> str:
    return f"event: {event}\ndata: {json.dumps(payload, sort_keys=True)}\n\n"


def create_app(
    config: AppConfig | None = None,
    backend_factory: Optional[Callable[[], Backend]] = None,
) -> FastAPI:
    """Build the service; ``backend_factory`` (when given) supplies the
    completion backend per request, which tests use for scripted runs."""
    config = config or AppConfig()
    registry = default_registry(config.data_dir)
    app = FastAPI(title="chemagent", version=__version__)

    def new_backend() -> Backend:
        if backend_factory is not None:
            return backend_factory()
        return make_backend(config.backend_config())

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.get("/v1/tools")
    def tools():
        return [
            {"name": t.name, "description": t.description, "output_kind": t.output_kind}
            for t in registry
        ]

    @app.post("/v1/describe")
    def describe(request: DescribeRequest):
        try:
            parse_smiles(request.smiles)
        except SmilesError as exc:
            return JSONResponse(status_code=422, content={"detail": f"invalid SMILES: {exc.message}"})
        return {tool.name: invoke(registry, tool.name, request.smiles).text for tool in registry}

    @app.post("/v1/ask", response_model=AskResponse)
    def ask(request: AskRequest):
        cfg = config.agent_config(request.prompt_strategy)
        try:
            outcome = run(request.question, cfg, registry, backend=new_backend())
        except BackendTimeout as exc:
            return JSONResponse(status_code=504, content={"detail": str(exc)})
        if outcome.termination == BACKEND_ERROR:
            return JSONResponse(
                status_code=502,
                content={"detail": "backend failure", "termination": outcome.termination},
            )
        return AskResponse(
            answer=outcome.final_answer,
            steps=[_step_view(s) for s in outcome.steps],
            timing_ms=outcome.wall_time * 1000.0,
            termination=outcome.termination,
        )

    @app.post("/v1/ask/stream")
    def ask_stream(request: AskRequest):
        cfg = config.agent_config(request.prompt_strategy)
        backend = new_backend()

        def event_stream():
            try:
                for kind, payload in stream_run(request.question, cfg, registry, backend):
                    if kind == "step":
                        yield _sse("step", _step_view(payload).model_dump())
                    else:
                        if payload.termination == ANSWERED:
                            yield _sse(
                                "final",
                                {
                                    "answer": payload.final_answer,
                                    "termination": payload.termination,
                                    "timing_ms": payload.wall_time * 1000.0,
                                },
                            )
                        else:
                            yield _sse(
                                "error",
                                {"termination": payload.termination, "detail": "no answer"},
                            )
            except Exception as exc:  # never leave the stream hanging
                log.exception("stream failed")
                yield _sse("error", {"termination": "internal_error", "detail": str(exc)})

        return StreamingResponse(event_stream(), media_type="text/event-stream")

    return app


def serve(config: AppConfig) -> None:
    """Run the service until interrupted (in-flight requests drain on exit)."""
    import uvicorn

    host, _, port = config.listen_address.rpartition(":")
    uvicorn.run(
        create_app(config),
        host=host or "127.0.0.1",
        port=int(port),
        log_level=config.log_level.lower(),
    )
