import { mkdirSync, renameSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { parseCorpus, splitSentences } from "./corpus.js";
import { AnnotationEngine, EngineError, RawDepResponse } from "./engines.js";
import { renderConllu } from "./conllu.js";
import { buildSrlSentence } from "./srl.js";
import { SrlFile, validateSrlFile } from "./types.js";

export type Mode = "dep-pos" | "srl" | "both";

export interface AnnotateResult {
  written: string[];
  warnings: string[];
}

function writeAtomic(dir: string, name: string, content: string): string {
  const path = join(dir, name);
  const tmp = join(dir, `.${name}.tmp`);
  writeFileSync(tmp, content, "utf-8");
  renameSync(tmp, path);
  return path;
}

/** Canonical JSON layout shared with the engine's serializer. */
export function renderSrlJson(file: SrlFile): string {
  return JSON.stringify(file, null, 2) + "\n";
}

export async function annotateCorpus(
  corpusContent: string,
  mode: Mode,
  outDir: string,
  engine: AnnotationEngine,
): Promise<AnnotateResult> {
  const entries = parseCorpus(corpusContent);
  const warnings: string[] = [];
  const written: string[] = [];
  mkdirSync(outDir, { recursive: true });

  for (const { id, text } of entries) {
    const sentences = splitSentences(text);
    // both modes need the dependency parse: the SRL output takes its
    // verb lemmas (and its token-consistency reference) from it
    const deps: RawDepResponse[] = [];
    for (const sentence of sentences) {
      deps.push(await engine.parseDependencies(sentence));
    }

    if (mode === "dep-pos" || mode === "both") {
      const blocks = sentences.map((s, i) => ({ text: s, dep: deps[i] }));
      written.push(writeAtomic(outDir, `${id}.conllu`, renderConllu(id, blocks)));
    }

    if (mode === "srl" || mode === "both") {
      const file: SrlFile = { sentences: [] };
      for (let i = 0; i < sentences.length; i++) {
        const raw = await engine.labelRoles(sentences[i]);
        const depTokens = deps[i].tokens.map((t) => t.text);
        if (depTokens.join(" ") !== raw.words.join(" ")) {
          throw new EngineError(
            `token mismatch between the dependency and role services for ` +
              `"${sentences[i]}"`,
          );
        }
        const lemmas = deps[i].tokens.map((t) => t.lemma);
        const { sentence, warnings: frameWarnings } = buildSrlSentence(
          sentences[i], raw, lemmas);
        warnings.push(...frameWarnings.map((w) => `${id}: ${w}`));
        file.sentences.push(sentence);
      }
      validateSrlFile(file); // never emit a file the engine would reject
      written.push(writeAtomic(outDir, `${id}.srl.json`, renderSrlJson(file)));
    }
  }
  return { written, warnings };
}
