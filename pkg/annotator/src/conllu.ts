import { RawDepResponse } from "./engines.js";

/** Render dependency parses as a CoNLL-U file (10 columns; XPOS, FEATS,
 * DEPS and MISC stay unassigned). One block per sentence. */
export function renderConllu(
  requirementId: string,
  sentences: { text: string; dep: RawDepResponse }[],
): string {
  const blocks = sentences.map(({ text, dep }, i) => {
    const lines = [`# sent_id = ${requirementId}-s${i + 1}`, `# text = ${text}`];
    for (const t of dep.tokens) {
      lines.push(
        [t.i, t.text, t.lemma, t.pos, "_", "_", t.head, t.dep, "_", "_"].join("\t"),
      );
    }
    return lines.join("\n") + "\n";
  });
  return blocks.join("\n");
}
