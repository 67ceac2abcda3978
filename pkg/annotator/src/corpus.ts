/** Requirement corpus reader: blank-line-separated blocks, first line `# <id>`. */

export interface CorpusEntry {
  id: string;
  text: string;
}

export function parseCorpus(content: string): CorpusEntry[] {
  const entries: CorpusEntry[] = [];
  const seen = new Set<string>();
  for (const block of content.trim().split(/\n\s*\n/)) {
    if (!block.trim()) continue;
    const lines = block.trim().split("\n");
    const header = lines[0].trim();
    if (!header.startsWith("#")) {
      throw new Error(`corpus block does not start with '# <id>': ${header}`);
    }
    const id = header.replace(/^#+\s*/, "").trim();
    if (!id || seen.has(id)) {
      throw new Error(`missing or duplicate requirement id '${id}'`);
    }
    seen.add(id);
    entries.push({
      id,
      text: lines.slice(1).map((l) => l.trim()).join(" ").trim(),
    });
  }
  return entries;
}

/** Same terminal-punctuation convention the engine uses. */
export function splitSentences(text: string): string[] {
  return text
    .trim()
    .split(/(?<=[.!?])\s+/)
    .filter((s) => s.length > 0);
}
