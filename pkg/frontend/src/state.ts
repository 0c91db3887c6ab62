/**
 * Client-side session state: the message list, the prompt-strategy toggle,
 * and the one-question-in-flight rule. State lives only in memory; a page
 * refresh clears it.
 */

import { StepView, Strategy, StreamEvent } from "./api.js";

export interface ChatMessage {
  role: "user" | "agent";
  text: string;
  trace: StepView[];
  termination?: string;
  timingMs?: number;
  error?: string;
  streaming?: boolean;
  /** set when a network failure makes the question retryable */
  retryQuestion?: string;
}

export interface SessionState {
  messages: ChatMessage[];
  strategy: Strategy;
  busy: boolean;
}

export type StreamSource = (question: string, strategy: Strategy) => AsyncGenerator<StreamEvent>;

export class Session {
  readonly state: SessionState = { messages: [], strategy: "domain", busy: false };
  private listeners: Array<() => void> = [];

  constructor(private readonly source: StreamSource) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  setStrategy(strategy: Strategy): void {
    this.state.strategy = strategy;
    this.emit();
  }

  /** Send is allowed only for non-empty input while nothing is streaming. */
  canSend(text: string): boolean {
    return !this.state.busy && text.trim().length > 0;
  }

  async sendQuestion(text: string): Promise<void> {
    const question = text.trim();
    if (!this.canSend(question)) return;
    this.state.busy = true;
    this.state.messages.push({ role: "user", text: question, trace: [] });
    const reply: ChatMessage = { role: "agent", text: "", trace: [], streaming: true };
    this.state.messages.push(reply);
    this.emit();
    try {
      for await (const event of this.source(question, this.state.strategy)) {
        if (event.kind === "step") {
          reply.trace.push(event.step); // arrival order, no reordering
        } else if (event.kind === "final") {
          reply.text = event.final.answer ?? "";
          reply.termination = event.final.termination;
          reply.timingMs = event.final.timing_ms;
        } else {
          reply.termination = event.error.termination;
          reply.error = event.error.detail ?? event.error.termination;
        }
        this.emit();
      }
      if (reply.termination === undefined) {
        reply.error = "stream ended without a final event";
        reply.termination = "incomplete";
      }
    } catch (error) {
      reply.error = error instanceof Error ? error.message : String(error);
      reply.termination = "network_error";
      reply.retryQuestion = question;
    } finally {
      reply.streaming = false;
      this.state.busy = false;
      this.emit();
    }
  }

  /** Re-send the question from a failed message's retry affordance. */
  async retry(messageIndex: number): Promise<void> {
    const failed = this.state.messages[messageIndex];
    if (!failed?.retryQuestion || this.state.busy) return;
    const question = failed.retryQuestion;
    this.state.messages.splice(messageIndex - 1, 2); // drop the failed exchange
    this.emit();
    await this.sendQuestion(question);
  }
}
