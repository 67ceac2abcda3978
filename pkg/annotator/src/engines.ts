/** Annotation engines: HTTP clients for the pretrained model services,
 * and a replay engine over recorded responses for hermetic operation.
 *
 * Wire protocol (see models.lock.json for the pinned model versions):
 *   POST <depUrl>   {"sentence": "..."} ->
 *     {"tokens": [{"i": 1, "text": "...", "lemma": "...", "pos": "...",
 *                  "dep": "...", "head": 0}, ...]}
 *   POST <srlUrl>   {"sentence": "..."} ->
 *     {"words": ["...", ...],
 *      "verbs": [{"verb": "...", "tags": ["B-ARG0", "I-ARG0", "B-V", ...]}]}
 */

import { readFileSync } from "node:fs";

export interface RawDepToken {
  i: number;
  text: string;
  lemma: string;
  pos: string;
  dep: string;
  head: number;
}

export interface RawDepResponse {
  tokens: RawDepToken[];
}

export interface RawSrlVerb {
  verb: string;
  tags: string[];
}

export interface RawSrlResponse {
  words: string[];
  verbs: RawSrlVerb[];
}

export interface AnnotationEngine {
  parseDependencies(sentence: string): Promise<RawDepResponse>;
  labelRoles(sentence: string): Promise<RawSrlResponse>;
}

export class EngineError extends Error {}

async function post<T>(url: string, sentence: string): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ sentence }),
    });
  } catch (err) {
    throw new EngineError(`cannot reach annotation service at ${url}: ${err}`);
  }
  if (!response.ok) {
    throw new EngineError(`annotation service at ${url} answered ${response.status}`);
  }
  return (await response.json()) as T;
}

export class HttpEngine implements AnnotationEngine {
  constructor(private depUrl: string, private srlUrl: string) {}

  parseDependencies(sentence: string): Promise<RawDepResponse> {
    return post<RawDepResponse>(this.depUrl, sentence);
  }

  labelRoles(sentence: string): Promise<RawSrlResponse> {
    return post<RawSrlResponse>(this.srlUrl, sentence);
  }
}

interface Recordings {
  dep: Record<string, RawDepResponse>;
  srl: Record<string, RawSrlResponse>;
}

export class ReplayEngine implements AnnotationEngine {
  private recordings: Recordings;

  constructor(recordingsPath: string) {
    try {
      this.recordings = JSON.parse(readFileSync(recordingsPath, "utf-8"));
    } catch (err) {
      throw new EngineError(`cannot load recordings from ${recordingsPath}: ${err}`);
    }
  }

  private lookup<T>(table: Record<string, T>, sentence: string, kind: string): T {
    const hit = table[sentence];
    if (hit === undefined) {
      throw new EngineError(
        `no recorded ${kind} response for: "${sentence}" ` +
          "(replay engine; configure --engine http with --dep-url/--srl-url " +
          "to annotate new sentences)",
      );
    }
    return hit;
  }

  async parseDependencies(sentence: string): Promise<RawDepResponse> {
    return this.lookup(this.recordings.dep, sentence, "dependency");
  }

  async labelRoles(sentence: string): Promise<RawSrlResponse> {
    return this.lookup(this.recordings.srl, sentence, "role");
  }
}
