import { describe, expect, it } from "vitest";

import { SSEParser } from "../src/sse.js";

describe("SSEParser", () => {
  it("parses one complete event", () => {
    const parser = new SSEParser();
    const events = parser.push('event: step\ndata: {"tool":"x"}\n\n');
    expect(events).toEqual([{ event: "step", data: '{"tool":"x"}' }]);
  });

  it("buffers partial blocks across pushes", () => {
    const parser = new SSEParser();
    expect(parser.push("event: fin")).toEqual([]);
    expect(parser.push("al\ndata: {}")).toEqual([]);
    expect(parser.push("\n\n")).toEqual([{ event: "final", data: "{}" }]);
  });

  it("returns several events from one chunk in order", () => {
    const parser = new SSEParser();
    const events = parser.push(
      "event: step\ndata: 1\n\nevent: step\ndata: 2\n\nevent: final\ndata: 3\n\n",
    );
    expect(events.map((e) => e.data)).toEqual(["1", "2", "3"]);
  });

  it("joins multi-line data fields with newlines", () => {
    const parser = new SSEParser();
    const events = parser.push("event: final\ndata: line one\ndata: line two\n\n");
    expect(events[0].data).toBe("line one\nline two");
  });

  it("ignores comments and unknown fields", () => {
    const parser = new SSEParser();
    const events = parser.push(": keepalive\nid: 7\nevent: step\ndata: x\n\n");
    expect(events).toEqual([{ event: "step", data: "x" }]);
  });

  it("flushes an unterminated final block on end", () => {
    const parser = new SSEParser();
    parser.push("event: final\ndata: tail");
    expect(parser.end()).toEqual([{ event: "final", data: "tail" }]);
    expect(parser.end()).toEqual([]);
  });

  it("defaults the event name to message", () => {
    const parser = new SSEParser();
    expect(parser.push("data: naked\n\n")).toEqual([{ event: "message", data: "naked" }]);
  });
});
