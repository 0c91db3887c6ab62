/** Page wiring: connects the session, the API client, and the DOM. */

import { ApiError, describeMolecule, fetchTools, streamQuestion, Strategy, ToolInfo } from "./api.js";
import { renderDescribeCard, renderDescribeError, renderMessages } from "./render.js";
import { Session } from "./state.js";

const baseUrl = window.location.origin;

const session = new Session((question, strategy) =>
  streamQuestion(baseUrl, question, strategy),
);

const messagesEl = document.getElementById("messages") as HTMLElement;
const inputEl = document.getElementById("question") as HTMLInputElement;
const sendEl = document.getElementById("send") as HTMLButtonElement;
const strategyEl = document.getElementById("strategy") as HTMLSelectElement;
const smilesEl = document.getElementById("smiles") as HTMLInputElement;
const describeEl = document.getElementById("describe") as HTMLButtonElement;
const cardEl = document.getElementById("card") as HTMLElement;

let tools: ToolInfo[] = [];

function refresh(): void {
  messagesEl.innerHTML = renderMessages(session.state.messages);
  messagesEl.scrollTop = messagesEl.scrollHeight;
  sendEl.disabled = !session.canSend(inputEl.value);
  strategyEl.value = session.state.strategy;
  for (const button of messagesEl.querySelectorAll<HTMLButtonElement>("button.retry")) {
    button.addEventListener("click", () => {
      void session.retry(Number(button.dataset.retry));
    });
  }
}

session.onChange(refresh);

inputEl.addEventListener("input", () => {
  sendEl.disabled = !session.canSend(inputEl.value);
});

async function submit(): Promise<void> {
  const text = inputEl.value;
  if (!session.canSend(text)) return;
  inputEl.value = "";
  await session.sendQuestion(text);
}

sendEl.addEventListener("click", () => void submit());
inputEl.addEventListener("keydown", (event) => {
  if (event.key === "Enter") void submit();
});

strategyEl.addEventListener("change", () => {
  session.setStrategy(strategyEl.value as Strategy);
});

describeEl.addEventListener("click", () => void describeNow());
smilesEl.addEventListener("keydown", (event) => {
  if (event.key === "Enter") void describeNow();
});

async function describeNow(): Promise<void> {
  const smiles = smilesEl.value.trim();
  if (!smiles) return;
  cardEl.innerHTML = `<p class="hint">looking up&hellip;</p>`;
  try {
    const values = await describeMolecule(baseUrl, smiles);
    cardEl.innerHTML = renderDescribeCard(tools, values);
  } catch (error) {
    if (error instanceof ApiError && error.status === 422) {
      cardEl.innerHTML = renderDescribeError(error.message);
    } else {
      cardEl.innerHTML = renderDescribeError(
        `service unavailable: ${error instanceof Error ? error.message : String(error)}`,
      );
    }
  }
}

void (async () => {
  try {
    tools = await fetchTools(baseUrl);
  } catch (error) {
    console.warn("could not load the tool list:", error);
  }
  refresh();
})();
