import { describe, expect, it } from "vitest";

import { buildSrlSentence } from "../src/srl.js";

const WORDS = ["The", "system", "shall", "close", "the", "valve", "."];
const LEMMAS = ["the", "system", "shall", "close", "the", "valve", "."];

describe("buildSrlSentence", () => {
  it("converts BIO tags into span arguments", () => {
    const raw = {
      words: WORDS,
      verbs: [
        {
          verb: "close",
          tags: ["B-ARG0", "I-ARG0", "B-ARGM-MOD", "B-V", "B-ARG1", "I-ARG1", "O"],
        },
      ],
    };
    const { sentence, warnings } = buildSrlSentence("The system shall close the valve.", raw, LEMMAS);
    expect(warnings).toEqual([]);
    const [frame] = sentence.frames;
    expect(frame.verb).toEqual({ index: 4, text: "close", lemma: "close" });
    expect(frame.arguments).toEqual([
      { label: "ARG0", start: 1, end: 2, text: "The system" },
      { label: "ARGM-MOD", start: 3, end: 3, text: "shall" },
      { label: "ARG1", start: 5, end: 6, text: "the valve" },
    ]);
  });

  it("skips reference and continuation labels with a warning", () => {
    const raw = {
      words: WORDS,
      verbs: [
        { verb: "close", tags: ["B-R-ARG0", "O", "O", "B-V", "B-ARG1", "I-ARG1", "O"] },
      ],
    };
    const { sentence, warnings } = buildSrlSentence("x", raw, LEMMAS);
    expect(sentence.frames[0].arguments.map((a) => a.label)).toEqual(["ARG1"]);
    expect(warnings.some((w) => w.includes("R-ARG0"))).toBe(true);
  });

  it("skips tag rows without a verb position", () => {
    const raw = {
      words: WORDS,
      verbs: [{ verb: "close", tags: ["O", "O", "O", "O", "O", "O", "O"] }],
    };
    const { sentence, warnings } = buildSrlSentence("x", raw, LEMMAS);
    expect(sentence.frames).toEqual([]);
    expect(warnings).toHaveLength(1);
  });

  it("separates two spans of the same label", () => {
    const words = ["a", "b", "c", "d", "e"];
    const raw = {
      words,
      verbs: [
        { verb: "c", tags: ["B-ARGM-TMP", "O", "B-V", "B-ARGM-TMP", "I-ARGM-TMP"] },
      ],
    };
    const { sentence } = buildSrlSentence("x", raw, words);
    expect(sentence.frames[0].arguments).toEqual([
      { label: "ARGM-TMP", start: 1, end: 1, text: "a" },
      { label: "ARGM-TMP", start: 4, end: 5, text: "d e" },
    ]);
  });

  it("starts a new span on B after I of the same label", () => {
    const words = ["a", "b", "c"];
    const raw = {
      words,
      verbs: [{ verb: "c", tags: ["B-ARG1", "B-ARG1", "B-V"] }],
    };
    const { sentence } = buildSrlSentence("x", raw, words);
    expect(sentence.frames[0].arguments).toEqual([
      { label: "ARG1", start: 1, end: 1, text: "a" },
      { label: "ARG1", start: 2, end: 2, text: "b" },
    ]);
  });

  it("takes verb lemmas from the dependency parse", () => {
    const words = ["valves", "closed", "."];
    const raw = { words, verbs: [{ verb: "closed", tags: ["B-ARG1", "B-V", "O"] }] };
    const { sentence } = buildSrlSentence("x", raw, ["valve", "close", "."]);
    expect(sentence.frames[0].verb.lemma).toBe("close");
  });
});
