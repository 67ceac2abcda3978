"""Regenerate recordings/fixtures.json from the engine's committed
annotation fixtures plus the dependency trees listed below.

The recordings hold raw service responses (token arrays for the
dependency endpoint, BIO tag rows for the role endpoint) keyed by
sentence text, so the annotator's transformation path is exercised
end to end without network access.

Run from the annotator/ directory: python3 tools/make_recordings.py
"""

import json
import re
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
ANNOTATIONS = HERE.parents[1] / "tests" / "fixtures" / "annotations"

# dependency trees for sentences that have no committed .conllu
# (index, text, lemma, pos, dep, head)
EXTRA_DEP_TREES = {
    "The maximum power shall be limited to G_Max and the event E1 shall be "
    "indicated when the device temperature exceeds T_Hi.": [
        (1, "The", "the", "DET", "det", 3),
        (2, "maximum", "maximum", "ADJ", "amod", 3),
        (3, "power", "power", "NOUN", "nsubjpass", 6),
        (4, "shall", "shall", "AUX", "aux", 6),
        (5, "be", "be", "AUX", "auxpass", 6),
        (6, "limited", "limit", "VERB", "root", 0),
        (7, "to", "to", "ADP", "prep", 6),
        (8, "G_Max", "G_Max", "NOUN", "pobj", 7),
        (9, "and", "and", "CCONJ", "cc", 6),
        (10, "the", "the", "DET", "det", 11),
        (11, "event", "event", "NOUN", "nsubjpass", 15),
        (12, "E1", "E1", "PROPN", "appos", 11),
        (13, "shall", "shall", "AUX", "aux", 15),
        (14, "be", "be", "AUX", "auxpass", 15),
        (15, "indicated", "indicate", "VERB", "conj", 6),
        (16, "when", "when", "SCONJ", "mark", 20),
        (17, "the", "the", "DET", "det", 19),
        (18, "device", "device", "NOUN", "compound", 19),
        (19, "temperature", "temperature", "NOUN", "nsubj", 20),
        (20, "exceeds", "exceed", "VERB", "advcl", 15),
        (21, "T_Hi", "T_Hi", "NOUN", "dobj", 20),
        (22, ".", ".", "PUNCT", "punct", 6),
    ],
    "The device fuel pump shall not be activated until the fuel level falls "
    "below L_Fp.": [
        (1, "The", "the", "DET", "det", 4),
        (2, "device", "device", "NOUN", "compound", 4),
        (3, "fuel", "fuel", "NOUN", "compound", 4),
        (4, "pump", "pump", "NOUN", "nsubjpass", 8),
        (5, "shall", "shall", "AUX", "aux", 8),
        (6, "not", "not", "PART", "neg", 8),
        (7, "be", "be", "AUX", "auxpass", 8),
        (8, "activated", "activate", "VERB", "root", 0),
        (9, "until", "until", "SCONJ", "mark", 13),
        (10, "the", "the", "DET", "det", 12),
        (11, "fuel", "fuel", "NOUN", "compound", 12),
        (12, "level", "level", "NOUN", "nsubj", 13),
        (13, "falls", "fall", "VERB", "advcl", 8),
        (14, "below", "below", "ADP", "prep", 13),
        (15, "L_Fp", "L_Fp", "NOUN", "pobj", 14),
        (16, ".", ".", "PUNCT", "punct", 8),
    ],
    "The device fuel pump shall be deactivated within 3s and shall be closed "
    "when the fuel level exceeds L_Fp.": [
        (1, "The", "the", "DET", "det", 4),
        (2, "device", "device", "NOUN", "compound", 4),
        (3, "fuel", "fuel", "NOUN", "compound", 4),
        (4, "pump", "pump", "NOUN", "nsubjpass", 7),
        (5, "shall", "shall", "AUX", "aux", 7),
        (6, "be", "be", "AUX", "auxpass", 7),
        (7, "deactivated", "deactivate", "VERB", "root", 0),
        (8, "within", "within", "ADP", "prep", 7),
        (9, "3s", "3s", "NOUN", "pobj", 8),
        (10, "and", "and", "CCONJ", "cc", 7),
        (11, "shall", "shall", "AUX", "aux", 13),
        (12, "be", "be", "AUX", "auxpass", 13),
        (13, "closed", "close", "VERB", "conj", 7),
        (14, "when", "when", "SCONJ", "mark", 18),
        (15, "the", "the", "DET", "det", 17),
        (16, "fuel", "fuel", "NOUN", "compound", 17),
        (17, "level", "level", "NOUN", "nsubj", 18),
        (18, "exceeds", "exceed", "VERB", "advcl", 13),
        (19, "L_Fp", "L_Fp", "NOUN", "dobj", 18),
        (20, ".", ".", "PUNCT", "punct", 7),
    ],
    "The system shall close the valve.": [
        (1, "The", "the", "DET", "det", 2),
        (2, "system", "system", "NOUN", "nsubj", 4),
        (3, "shall", "shall", "AUX", "aux", 4),
        (4, "close", "close", "VERB", "root", 0),
        (5, "the", "the", "DET", "det", 6),
        (6, "valve", "valve", "NOUN", "dobj", 4),
        (7, ".", ".", "PUNCT", "punct", 4),
    ],
}


def dep_from_conllu(path):
    sentences = []
    text = None
    tokens = []
    for line in path.read_text("utf-8").splitlines():
        if line.startswith("# text = "):
            text = line[len("# text = "):]
        elif line.startswith("#") or not line.strip():
            if tokens:
                sentences.append((text, tokens))
                tokens = []
            continue
        else:
            cols = line.split("\t")
            tokens.append({
                "i": int(cols[0]), "text": cols[1], "lemma": cols[2],
                "pos": cols[3], "dep": cols[7], "head": int(cols[6]),
            })
    if tokens:
        sentences.append((text, tokens))
    return sentences


def bio_from_frames(sentence):
    rows = []
    n = len(sentence["tokens"])
    for frame in sentence["frames"]:
        tags = ["O"] * n
        tags[frame["verb"]["index"] - 1] = "B-V"
        for arg in frame["arguments"]:
            for pos in range(arg["start"], arg["end"] + 1):
                prefix = "B" if pos == arg["start"] else "I"
                tags[pos - 1] = f"{prefix}-{arg['label']}"
        rows.append({"verb": frame["verb"]["text"], "tags": tags})
    return {"words": list(sentence["tokens"]), "verbs": rows}


def main():
    recordings = {"dep": {}, "srl": {}}
    for path in sorted(ANNOTATIONS.glob("*.conllu")):
        for text, tokens in dep_from_conllu(path):
            recordings["dep"][text] = {"tokens": tokens}
    for text, rows in EXTRA_DEP_TREES.items():
        recordings["dep"][text] = {"tokens": [
            {"i": i, "text": t, "lemma": l, "pos": p, "dep": d, "head": h}
            for i, t, l, p, d, h in rows
        ]}
    for path in sorted(ANNOTATIONS.glob("*.srl.json")):
        data = json.loads(path.read_text("utf-8"))
        for sentence in data["sentences"]:
            recordings["srl"][sentence["text"]] = bio_from_frames(sentence)

    out = HERE.parent / "recordings" / "fixtures.json"
    out.write_text(json.dumps(recordings, indent=2, ensure_ascii=False) + "\n",
                   "utf-8")
    print(f"wrote {out} ({len(recordings['dep'])} dep, "
          f"{len(recordings['srl'])} srl sentences)")


if __name__ == "__main__":
    main()
