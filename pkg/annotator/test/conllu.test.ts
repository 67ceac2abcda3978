import { describe, expect, it } from "vitest";

import { renderConllu } from "../src/conllu.js";

const DEP = {
  tokens: [
    { i: 1, text: "Stop", lemma: "stop", pos: "VERB", dep: "root", head: 0 },
    { i: 2, text: ".", lemma: ".", pos: "PUNCT", dep: "punct", head: 1 },
  ],
};

describe("renderConllu", () => {
  it("renders ten tab-separated columns with comments", () => {
    const text = renderConllu("x", [{ text: "Stop.", dep: DEP }]);
    const lines = text.split("\n");
    expect(lines[0]).toBe("# sent_id = x-s1");
    expect(lines[1]).toBe("# text = Stop.");
    expect(lines[2].split("\t")).toEqual([
      "1", "Stop", "stop", "VERB", "_", "_", "0", "root", "_", "_",
    ]);
    expect(text.endsWith("\n")).toBe(true);
  });

  it("separates sentence blocks with a blank line", () => {
    const text = renderConllu("x", [
      { text: "Stop.", dep: DEP },
      { text: "Stop.", dep: DEP },
    ]);
    expect(text).toContain("\n\n# sent_id = x-s2");
  });
});
