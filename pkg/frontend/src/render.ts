/**
 * HTML rendering as pure functions over state, so the view logic is
 * testable without a DOM. All user- and service-provided text is escaped;
 * the UI displays values exactly as the service sent them.
 */

import { ToolInfo } from "./api.js";
import { ChatMessage } from "./state.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

export function renderTrace(message: ChatMessage): string {
  if (message.trace.length === 0) return "";
  const steps = message.trace
    .map(
      (step, index) => `
      <details class="step">
        <summary>step ${index + 1}: ${escapeHtml(step.tool)}</summary>
        <dl>
          <dt>thought</dt><dd>${escapeHtml(step.thought)}</dd>
          <dt>action</dt><dd>${escapeHtml(step.tool)}(${escapeHtml(step.input)})</dd>
          <dt>observation</dt><dd>${escapeHtml(step.observation)}</dd>
        </dl>
      </details>`,
    )
    .join("");
  return `<div class="trace">${steps}</div>`;
}

export function renderMessage(message: ChatMessage, index: number): string {
  if (message.role === "user") {
    return `<div class="message user"><div class="bubble">${escapeHtml(message.text)}</div></div>`;
  }
  if (message.error) {
    const retry = message.retryQuestion
      ? `<button class="retry" data-retry="${index}">retry</button>`
      : "";
    return `
      <div class="message agent">
        ${renderTrace(message)}
        <div class="bubble error">
          <span class="badge">${escapeHtml(message.termination ?? "error")}</span>
          ${escapeHtml(message.error)} ${retry}
        </div>
      </div>`;
  }
  const status = message.streaming
    ? `<span class="badge live">thinking&hellip;</span>`
    : `<span class="badge">${escapeHtml(message.termination ?? "")}</span>`;
  const timing =
    message.timingMs !== undefined ? `<span class="timing">${message.timingMs.toFixed(0)} ms</span>` : "";
  return `
    <div class="message agent">
      ${renderTrace(message)}
      <div class="bubble">${escapeHtml(message.text)} ${status} ${timing}</div>
    </div>`;
}

export function renderMessages(messages: ChatMessage[]): string {
  return messages.map(renderMessage).join("\n");
}

/** The quick-describe card: all ten values in registry (table) order. */
export function renderDescribeCard(
  tools: ToolInfo[],
  values: Record<string, string>,
): string {
  const displayNames: Record<string, string> = {
    calculate_molwt: "MolWt",
    calculate_logp: "LogP",
    calculate_tpsa: "TPSA",
    calculate_qed: "QED",
    calculate_sa: "SA",
    check_bbb_permeant: "BBB Permeant",
    check_gi_absorption: "GI Absorption",
    check_druglikeness: "Druglikeness",
    check_brenk: "Brenk Filter",
    check_pains: "PAINS Filter",
  };
  const rows = tools
    .map((tool) => {
      const label = displayNames[tool.name] ?? tool.name;
      const value = values[tool.name] ?? "?";
      return `<tr><th>${escapeHtml(label)}</th><td data-tool="${escapeHtml(tool.name)}">${escapeHtml(value)}</td></tr>`;
    })
    .join("");
  return `<table class="props">${rows}</table>`;
}

export function renderDescribeError(detail: string): string {
  return `<p class="hint error">${escapeHtml(detail)}</p>`;
}
