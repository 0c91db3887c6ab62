import { describe, expect, it } from "vitest";

import { StepView, Strategy, StreamEvent } from "../src/api.js";
import { Session } from "../src/state.js";

const STEP: StepView = {
  thought: "need TPSA",
  tool: "calculate_tpsa",
  input: "C(CS)O",
  observation: "20.23",
};

function sourceOf(events: StreamEvent[], log?: Array<{ q: string; s: Strategy }>) {
  return async function* (question: string, strategy: Strategy) {
    log?.push({ q: question, s: strategy });
    for (const event of events) {
      yield event;
    }
  };
}

const HAPPY: StreamEvent[] = [
  { kind: "step", step: STEP },
  { kind: "final", final: { answer: "20.23", termination: "answered", timing_ms: 2 } },
];

describe("Session", () => {
  it("streams steps then the final answer into one agent message", async () => {
    const session = new Session(sourceOf(HAPPY));
    await session.sendQuestion("What is the TPSA of C(CS)O?");
    expect(session.state.messages).toHaveLength(2);
    const [user, agent] = session.state.messages;
    expect(user.role).toBe("user");
    const reply = agent;
    expect(reply.trace).toEqual([STEP]);
    expect(reply.text).toBe("20.23");
    expect(reply.termination).toBe("answered");
    expect(reply.streaming).toBe(false);
  });

  it("keeps trace events in arrival order", async () => {
    const steps: StreamEvent[] = [1, 2, 3].map((n) => ({
      kind: "step",
      step: { ...STEP, observation: String(n) },
    }));
    const session = new Session(
      sourceOf([...steps, { kind: "final", final: { answer: "x", termination: "answered" } }]),
    );
    await session.sendQuestion("q");
    expect(session.state.messages[1].trace.map((s) => s.observation)).toEqual(["1", "2", "3"]);
  });

  it("disables send for empty input and while streaming", async () => {
    let resolveGate: () => void = () => {};
    const gate = new Promise<void>((resolve) => (resolveGate = resolve));
    const session = new Session(async function* () {
      await gate;
      yield { kind: "final", final: { answer: "ok", termination: "answered" } } as StreamEvent;
    });
    expect(session.canSend("")).toBe(false);
    expect(session.canSend("   ")).toBe(false);
    expect(session.canSend("hello")).toBe(true);
    const pending = session.sendQuestion("hello");
    expect(session.state.busy).toBe(true);
    expect(session.canSend("another")).toBe(false);
    resolveGate();
    await pending;
    expect(session.state.busy).toBe(false);
    expect(session.canSend("another")).toBe(true);
  });

  it("default strategy is domain and the toggle persists across messages", async () => {
    const log: Array<{ q: string; s: Strategy }> = [];
    const session = new Session(sourceOf(HAPPY, log));
    expect(session.state.strategy).toBe("domain");
    await session.sendQuestion("first");
    session.setStrategy("minimal");
    await session.sendQuestion("second");
    await session.sendQuestion("third");
    expect(log.map((entry) => entry.s)).toEqual(["domain", "minimal", "minimal"]);
  });

  it("renders an error card with the termination reason", async () => {
    const session = new Session(
      sourceOf([{ kind: "error", error: { termination: "parse_failure_limit", detail: "no answer" } }]),
    );
    await session.sendQuestion("q");
    const reply = session.state.messages[1];
    expect(reply.error).toBe("no answer");
    expect(reply.termination).toBe("parse_failure_limit");
  });

  it("network failure marks the message retryable and retry re-sends", async () => {
    let attempts = 0;
    const session = new Session(async function* (question: string) {
      attempts += 1;
      if (attempts === 1) throw new Error("connection refused");
      yield {
        kind: "final",
        final: { answer: `ok: ${question}`, termination: "answered" },
      } as StreamEvent;
    });
    await session.sendQuestion("flaky?");
    expect(session.state.messages[1].retryQuestion).toBe("flaky?");
    expect(session.state.messages[1].termination).toBe("network_error");
    await session.retry(1);
    expect(attempts).toBe(2);
    expect(session.state.messages).toHaveLength(2);
    expect(session.state.messages[1].text).toBe("ok: flaky?");
  });

  it("notifies listeners on every event", async () => {
    const session = new Session(sourceOf(HAPPY));
    let notifications = 0;
    session.onChange(() => (notifications += 1));
    await session.sendQuestion("q");
    expect(notifications).toBeGreaterThanOrEqual(3); // send, step, final
  });
});
