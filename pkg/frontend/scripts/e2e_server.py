"""Boot the chemagent service with a scripted backend for frontend e2e runs.

Every request gets a fresh script that answers the mercaptoethanol TPSA
question with one tool step; /v1/describe uses the real descriptor engine.
"""

import sys

import uvicorn

from chemagent.agent import BackendConfig, ScriptedBackend
from chemagent.app import AppConfig, create_app

REPLIES = (
    "Thought: the question asks for a polar surface area\n"
    "Action: calculate_tpsa\n"
    "Action Input: C(CS)O",
    "Final Answer: 20.23",
)


def main() -> None:
    port = int(sys.argv[1]) if len(sys.argv) > 1 else 8801
    config = BackendConfig(kind="scripted", scripted_replies=REPLIES)
    app = create_app(AppConfig(), backend_factory=lambda: ScriptedBackend(config))
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    main()
