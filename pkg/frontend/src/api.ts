/**
 * Typed client for the chemagent HTTP/SSE API. This module is the only
 * place the UI touches the network; it performs no chemistry of its own.
 */

import { SSEParser } from "./sse.js";

export type Strategy = "minimal" | "domain";

export interface StepView {
  thought: string;
  tool: string;
  input: string;
  observation: string;
}

export interface FinalView {
  answer: string | null;
  termination: string;
  timing_ms?: number;
}

export interface ErrorView {
  termination: string;
  detail?: string;
}

export type StreamEvent =
  | { kind: "step"; step: StepView }
  | { kind: "final"; final: FinalView }
  | { kind: "error"; error: ErrorView };

export interface ToolInfo {
  name: string;
  description: string;
  output_kind: string;
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

type FetchLike = typeof fetch;

function isStep(value: unknown): value is StepView {
  const v = value as StepView;
  return (
    !!v &&
    typeof v.thought === "string" &&
    typeof v.tool === "string" &&
    typeof v.input === "string" &&
    typeof v.observation === "string"
  );
}

/**
 * POST the question to the streaming endpoint and yield events as they
 * arrive. Malformed events are skipped with a console diagnostic; they
 * never abort the stream.
 */
export async function* streamQuestion(
  baseUrl: string,
  question: string,
  strategy: Strategy,
  fetchImpl: FetchLike = fetch,
): AsyncGenerator<StreamEvent> {
  const response = await fetchImpl(`${baseUrl}/v1/ask/stream`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ question, prompt_strategy: strategy }),
  });
  if (!response.ok || !response.body) {
    throw new ApiError(`stream request failed (HTTP ${response.status})`, response.status);
  }
  const reader = response.body.getReader();
  const decoder = new TextDecoder();
  const parser = new SSEParser();
  try {
    while (true) {
      const { done, value } = await reader.read();
      const raw = done ? parser.end() : parser.push(decoder.decode(value, { stream: true }));
      for (const item of raw) {
        const event = decodeEvent(item.event, item.data);
        if (event) yield event;
      }
      if (done) break;
    }
  } finally {
    reader.releaseLock();
  }
}

function decodeEvent(name: string, payload: string): StreamEvent | null {
  let data: unknown;
  try {
    data = JSON.parse(payload);
  } catch {
    console.warn(`skipping malformed ${name} event:`, payload);
    return null;
  }
  if (name === "step") {
    if (isStep(data)) return { kind: "step", step: data };
    console.warn("skipping step event with missing fields:", data);
    return null;
  }
  if (name === "final") {
    const v = data as FinalView;
    if (v && typeof v.termination === "string") return { kind: "final", final: v };
    console.warn("skipping malformed final event:", data);
    return null;
  }
  if (name === "error") {
    const v = data as ErrorView;
    return { kind: "error", error: { termination: v?.termination ?? "unknown", detail: v?.detail } };
  }
  console.warn(`skipping unknown event type: ${name}`);
  return null;
}

/** All ten property values for one molecule, keyed by tool name. */
export async function describeMolecule(
  baseUrl: string,
  smiles: string,
  fetchImpl: FetchLike = fetch,
): Promise<Record<string, string>> {
  const response = await fetchImpl(`${baseUrl}/v1/describe`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ smiles }),
  });
  if (response.status === 422) {
    const body = (await response.json()) as { detail?: string };
    throw new ApiError(body.detail ?? "invalid SMILES", 422);
  }
  if (!response.ok) {
    throw new ApiError(`describe failed (HTTP ${response.status})`, response.status);
  }
  return (await response.json()) as Record<string, string>;
}

export async function fetchTools(
  baseUrl: string,
  fetchImpl: FetchLike = fetch,
): Promise<ToolInfo[]> {
  const response = await fetchImpl(`${baseUrl}/v1/tools`);
  if (!response.ok) {
    throw new ApiError(`tool listing failed (HTTP ${response.status})`, response.status);
  }
  return (await response.json()) as ToolInfo[];
}
