/**
 * Incremental server-sent-events parser.
 *
 * Feed it decoded text chunks as they arrive; it returns completed events
 * (separated by blank lines) and buffers any partial block for the next
 * push. Multi-line `data:` fields are joined with newlines per the SSE
 * specification.
 */

export interface RawEvent {
  event: string;
  data: string;
}

export class SSEParser {
  private buffer = "";

  push(chunk: string): RawEvent[] {
    this.buffer += chunk;
    const events: RawEvent[] = [];
    let separator: number;
    while ((separator = this.buffer.indexOf("\n\n")) !== -1) {
      const block = this.buffer.slice(0, separator);
      this.buffer = this.buffer.slice(separator + 2);
      const parsed = parseBlock(block);
      if (parsed) events.push(parsed);
    }
    return events;
  }

  /** Flush a trailing block that was not newline-terminated. */
  end(): RawEvent[] {
    const block = this.buffer;
    this.buffer = "";
    const parsed = parseBlock(block);
    return parsed ? [parsed] : [];
  }
}

function parseBlock(block: string): RawEvent | null {
  let event = "";
  const data: string[] = [];
  for (const line of block.split("\n")) {
    if (line.startsWith("event:")) {
      event = line.slice("event:".length).trim();
    } else if (line.startsWith("data:")) {
      data.push(line.slice("data:".length).trimStart());
    }
    // comment lines (":...") and unknown fields are ignored
  }
  if (!event && data.length === 0) return null;
  return { event: event || "message", data: data.join("\n") };
}
