import { afterAll, beforeAll, describe, expect, it, vi } from "vitest";
import { Server } from "node:http";

import { ApiError, describeMolecule, fetchTools, streamQuestion, StreamEvent } from "../src/api.js";
import { DESCRIBE_C2H2, startStub } from "./stub_server.js";

let baseUrl = "";
let server: Server;

beforeAll(async () => {
  const stub = await startStub();
  baseUrl = stub.url;
  server = stub.server;
});

afterAll(() => {
  server.close();
});

describe("streamQuestion", () => {
  it("yields step and final events, skipping the malformed one", async () => {
    const warn = vi.spyOn(console, "warn").mockImplementation(() => {});
    const events: StreamEvent[] = [];
    for await (const event of streamQuestion(baseUrl, "What is the TPSA of C(CS)O?", "domain")) {
      events.push(event);
    }
    expect(events).toHaveLength(2);
    expect(events[0]).toEqual({
      kind: "step",
      step: { thought: "need TPSA", tool: "calculate_tpsa", input: "C(CS)O", observation: "20.23" },
    });
    expect(events[1].kind).toBe("final");
    if (events[1].kind === "final") {
      expect(events[1].final.answer).toBe("20.23");
      expect(events[1].final.termination).toBe("answered");
    }
    expect(warn).toHaveBeenCalled(); // the junk event was diagnosed, not fatal
    warn.mockRestore();
  });

  it("throws ApiError for a non-OK response", async () => {
    await expect(async () => {
      for await (const _ of streamQuestion(baseUrl + "/missing", "q", "domain")) {
        void _;
      }
    }).rejects.toThrowError(ApiError);
  });
});

describe("describeMolecule", () => {
  it("returns the ten-value map", async () => {
    const values = await describeMolecule(baseUrl, "C#C");
    expect(values).toEqual(DESCRIBE_C2H2);
    expect(values.check_gi_absorption).toBe("Low");
  });

  it("maps 422 to ApiError with the service detail", async () => {
    await expect(describeMolecule(baseUrl, "xyz")).rejects.toMatchObject({
      status: 422,
      message: expect.stringContaining("invalid SMILES"),
    });
  });
});

describe("fetchTools", () => {
  it("lists the ten tools in order", async () => {
    const tools = await fetchTools(baseUrl);
    expect(tools.map((tool) => tool.name)).toEqual([
      "calculate_molwt",
      "calculate_logp",
      "calculate_tpsa",
      "calculate_qed",
      "calculate_sa",
      "check_bbb_permeant",
      "check_gi_absorption",
      "check_druglikeness",
      "check_brenk",
      "check_pains",
    ]);
  });
});
