import { RawSrlResponse } from "./engines.js";
import { SRL_LABELS, SrlArgument, SrlFrame, SrlLabel, SrlSentence } from "./types.js";

const KNOWN_LABELS = new Set<string>(SRL_LABELS);

export interface SrlBuildResult {
  sentence: SrlSentence;
  warnings: string[];
}

/** Turn a BIO-tagged role response into span-based frames.
 *
 * Reference and continuation labels (R-*, C-*) have no place in the
 * span format and are skipped with a warning, as are tag rows without a
 * verb position. Verb lemmas come from the dependency parse, which is
 * also the token-consistency reference.
 */
export function buildSrlSentence(
  text: string,
  raw: RawSrlResponse,
  lemmas: string[],
): SrlBuildResult {
  const warnings: string[] = [];
  const frames: SrlFrame[] = [];

  for (const row of raw.verbs) {
    if (row.tags.length !== raw.words.length) {
      warnings.push(`tag row for '${row.verb}' has wrong length; skipped`);
      continue;
    }
    let verbIndex = 0;
    const spans: { label: string; start: number; end: number }[] = [];
    let open: { label: string; start: number; end: number } | null = null;

    const flush = () => {
      if (open) spans.push(open);
      open = null;
    };

    row.tags.forEach((tag, i) => {
      const position = i + 1;
      if (tag === "O") {
        flush();
        return;
      }
      const dash = tag.indexOf("-");
      const marker = tag.slice(0, dash);
      const label = tag.slice(dash + 1);
      if (label === "V") {
        flush();
        if (verbIndex === 0) verbIndex = position;
        return;
      }
      if (marker === "B" || !open || open.label !== label) {
        flush();
        open = { label, start: position, end: position };
      } else {
        open.end = position;
      }
    });
    flush();

    if (verbIndex === 0) {
      warnings.push(`no verb position in tag row for '${row.verb}'; frame skipped`);
      continue;
    }

    const args: SrlArgument[] = [];
    for (const span of spans) {
      if (span.label.startsWith("R-") || span.label.startsWith("C-")) {
        warnings.push(
          `reference/continuation argument ${span.label} on '${row.verb}' skipped`);
        continue;
      }
      if (!KNOWN_LABELS.has(span.label)) {
        warnings.push(`unknown argument label ${span.label} on '${row.verb}' skipped`);
        continue;
      }
      args.push({
        label: span.label as SrlLabel,
        start: span.start,
        end: span.end,
        text: raw.words.slice(span.start - 1, span.end).join(" "),
      });
    }

    frames.push({
      verb: {
        index: verbIndex,
        text: raw.words[verbIndex - 1],
        lemma: lemmas[verbIndex - 1] ?? raw.words[verbIndex - 1],
      },
      arguments: args,
    });
  }

  return {
    sentence: { text, tokens: [...raw.words], frames },
    warnings,
  };
}
