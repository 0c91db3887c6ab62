"""HTTP service tests: endpoints, error mapping, SSE streaming, and
stream/one-shot equivalence with scripted backends."""

import json

import pytest
from fastapi.testclient import TestClient

from chemagent.agent import BackendConfig, ScriptedBackend
from chemagent.app import AppConfig, create_app


def scripted_client(*replies) -> TestClient:
    config = BackendConfig(kind="scripted", scripted_replies=tuple(replies))
    app = create_app(AppConfig(), backend_factory=lambda: ScriptedBackend(config))
    return TestClient(app)


@pytest.fixture(scope="module")
def oracle_client() -> TestClient:
    return TestClient(create_app(AppConfig()))


def parse_sse(text: str) -> list[tuple[str, dict]]:
    events = []
    for block in text.strip().split("\n\n"):
        event, data = None, None
        for line in block.splitlines():
            if line.startswith("event: "):
                event = line[len("event: "):]
            elif line.startswith("data: "):
                data = json.loads(line[len("data: "):])
        if event:
            events.append((event, data))
    return events


class TestBasicEndpoints:
    def test_healthz(self, oracle_client):
        response = oracle_client.get("/healthz")
        assert response.status_code == 200
        assert response.text == "ok"

    def test_tools_lists_ten(self, oracle_client):
        body = oracle_client.get("/v1/tools").json()
        assert len(body) == 10
        assert body[2]["name"] == "calculate_tpsa"
        assert body[2]["output_kind"] == "real2dp"

    def test_describe(self, oracle_client):
        response = oracle_client.post("/v1/describe", json={"smiles": "C(CS)O"})
        assert response.status_code == 200
        body = response.json()
        assert body["calculate_tpsa"] == "20.23"
        assert len(body) == 10

    def test_describe_invalid_smiles_422(self, oracle_client):
        response = oracle_client.post("/v1/describe", json={"smiles": "xyz"})
        assert response.status_code == 422
        assert "invalid SMILES" in response.json()["detail"]

    def test_malformed_body_400(self, oracle_client):
        response = oracle_client.post("/v1/describe", json={"nope": 1})
        assert response.status_code == 400
        response = oracle_client.post("/v1/ask", json={})
        assert response.status_code == 400


class TestAsk:
    def test_oracle_ask(self, oracle_client):
        response = oracle_client.post("/v1/ask", json={"question": "What is the TPSA of C(CS)O?"})
        assert response.status_code == 200
        body = response.json()
        assert body["answer"] == "20.23"
        assert body["termination"] == "answered"
        assert len(body["steps"]) == 1
        assert body["steps"][0]["tool"] == "calculate_tpsa"
        assert body["timing_ms"] >= 0

    def test_scripted_passthrough(self):
        client = scripted_client("Final Answer: Yes")
        body = client.post("/v1/ask", json={"question": "whatever"}).json()
        assert body["answer"] == "Yes"
        assert body["steps"] == []

    def test_backend_failure_502(self):
        client = scripted_client()  # empty script: backend error on first call
        response = client.post("/v1/ask", json={"question": "q"})
        assert response.status_code == 502
        assert response.json()["termination"] == "backend_error"

    def test_prompt_strategy_override(self, oracle_client):
        response = oracle_client.post(
            "/v1/ask",
            json={"question": "What is the TPSA of CCO?", "prompt_strategy": "minimal"},
        )
        assert response.status_code == 200
        assert response.json()["answer"] == "20.23"


class TestStreaming:
    def test_stream_events(self, oracle_client):
        response = oracle_client.post(
            "/v1/ask/stream", json={"question": "What is the TPSA of C(CS)O?"}
        )
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/event-stream")
        events = parse_sse(response.text)
        assert [e for e, _ in events] == ["step", "final"]
        step = events[0][1]
        assert step["tool"] == "calculate_tpsa"
        assert step["observation"] == "20.23"
        assert events[1][1]["answer"] == "20.23"

    def test_stream_matches_oneshot(self):
        replies = (
            "Thought: t\nAction: calculate_tpsa\nAction Input: CCO",
            "Final Answer: 20.23",
        )
        stream_events = parse_sse(
            scripted_client(*replies).post("/v1/ask/stream", json={"question": "q"}).text
        )
        oneshot = scripted_client(*replies).post("/v1/ask", json={"question": "q"}).json()
        assert [data for e, data in stream_events if e == "step"] == oneshot["steps"]
        final = stream_events[-1][1]
        assert final["answer"] == oneshot["answer"]
        assert final["termination"] == oneshot["termination"]

    def test_stream_error_event(self):
        client = scripted_client("garbage", "also garbage")
        events = parse_sse(client.post("/v1/ask/stream", json={"question": "q"}).text)
        assert events[-1][0] == "error"
        assert events[-1][1]["termination"] == "parse_failure_limit"


class TestStatelessness:
    def test_interleaving_independent(self, oracle_client):
        questions = [
            "What is the TPSA of C(CS)O?",
            "What is the GI absorption of C#C?",
            "Does CCON=O pass the blood brain barrier?",
        ]
        first = [oracle_client.post("/v1/ask", json={"question": q}).json()["answer"]
                 for q in questions]
        second = [oracle_client.post("/v1/ask", json={"question": q}).json()["answer"]
                  for q in reversed(questions)]
        assert first == ["20.23", "Low", "Yes"]
        assert list(reversed(second)) == first

    def test_cli_service_parity_describe(self, oracle_client):
        from chemagent.toolbox import default_registry, invoke

        registry = default_registry()
        body = oracle_client.post("/v1/describe", json={"smiles": "CC(=O)Oc1ccccc1C(=O)O"}).json()
        for tool in registry:
            assert body[tool.name] == invoke(registry, tool.name, "CC(=O)Oc1ccccc1C(=O)O").text
