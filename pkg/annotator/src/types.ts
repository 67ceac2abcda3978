import { z } from "zod";

/** The 24 role labels the engine accepts: ARG0-ARG4 plus 19 ARGM-* roles. */
export const SRL_LABELS = [
  "ARG0", "ARG1", "ARG2", "ARG3", "ARG4",
  "ARGM-ADJ", "ARGM-ADV", "ARGM-CAU", "ARGM-COM", "ARGM-DIR", "ARGM-DIS",
  "ARGM-DSP", "ARGM-EXT", "ARGM-GOL", "ARGM-LOC", "ARGM-LVB", "ARGM-MNR",
  "ARGM-MOD", "ARGM-NEG", "ARGM-PNC", "ARGM-PRD", "ARGM-PRP", "ARGM-REC",
  "ARGM-TMP",
] as const;

export type SrlLabel = (typeof SRL_LABELS)[number];

export interface DepToken {
  index: number; // 1-based
  text: string;
  lemma: string;
  pos: string;
  dep: string;
  head: number; // 0 for the root
}

export interface SrlArgument {
  label: SrlLabel;
  start: number; // 1-based inclusive token range
  end: number;
  text: string;
}

export interface SrlFrame {
  verb: { index: number; text: string; lemma: string };
  arguments: SrlArgument[];
}

export interface SrlSentence {
  text: string;
  tokens: string[];
  frames: SrlFrame[];
}

export interface SrlFile {
  sentences: SrlSentence[];
}

const argumentSchema = z.object({
  label: z.enum(SRL_LABELS),
  start: z.number().int().min(1),
  end: z.number().int().min(1),
  text: z.string(),
});

const frameSchema = z.object({
  verb: z.object({
    index: z.number().int().min(1),
    text: z.string(),
    lemma: z.string(),
  }),
  arguments: z.array(argumentSchema),
});

const sentenceSchema = z
  .object({
    text: z.string(),
    tokens: z.array(z.string()).min(1),
    frames: z.array(frameSchema),
  })
  .superRefine((sentence, ctx) => {
    const n = sentence.tokens.length;
    sentence.frames.forEach((frame, f) => {
      if (frame.verb.index > n) {
        ctx.addIssue({ code: "custom", message: `frame ${f + 1}: verb index out of range` });
        return;
      }
      if (sentence.tokens[frame.verb.index - 1] !== frame.verb.text) {
        ctx.addIssue({ code: "custom", message: `frame ${f + 1}: verb text does not match its token` });
      }
      const taken = new Set<number>([frame.verb.index]);
      for (const arg of frame.arguments) {
        if (arg.start > arg.end || arg.end > n) {
          ctx.addIssue({ code: "custom", message: `frame ${f + 1}: bad span for ${arg.label}` });
          continue;
        }
        const words: string[] = [];
        for (let i = arg.start; i <= arg.end; i++) {
          if (taken.has(i)) {
            ctx.addIssue({
              code: "custom",
              message: `frame ${f + 1}: span of ${arg.label} overlaps the verb or another argument`,
            });
          }
          taken.add(i);
          words.push(sentence.tokens[i - 1]);
        }
        if (words.join(" ") !== arg.text) {
          ctx.addIssue({ code: "custom", message: `frame ${f + 1}: text of ${arg.label} does not match its span` });
        }
      }
    });
  });

/** Mirrors docs/srl.schema.json plus the span/text consistency rules. */
export const srlFileSchema = z.object({ sentences: z.array(sentenceSchema) });

export function validateSrlFile(data: unknown): SrlFile {
  return srlFileSchema.parse(data) as SrlFile;
}
