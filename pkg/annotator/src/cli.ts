#!/usr/bin/env node
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { annotateCorpus, Mode } from "./annotate.js";
import { AnnotationEngine, EngineError, HttpEngine, ReplayEngine } from "./engines.js";

const packageRoot = join(dirname(fileURLToPath(import.meta.url)), "..");

function buildEngine(argv: {
  engine?: string;
  depUrl?: string;
  srlUrl?: string;
  recordings: string;
}): AnnotationEngine {
  const depUrl = argv.depUrl ?? process.env.REQFORMAL_DEP_URL;
  const srlUrl = argv.srlUrl ?? process.env.REQFORMAL_SRL_URL;
  const kind = argv.engine ?? (depUrl && srlUrl ? "http" : "replay");
  if (kind === "http") {
    if (!depUrl || !srlUrl) {
      throw new EngineError(
        "http engine needs --dep-url and --srl-url (or REQFORMAL_DEP_URL / " +
          "REQFORMAL_SRL_URL)",
      );
    }
    return new HttpEngine(depUrl, srlUrl);
  }
  return new ReplayEngine(argv.recordings);
}

async function main(): Promise<number> {
  const argv = await yargs(hideBin(process.argv))
    .usage("$0 --mode {dep-pos|srl|both} --in FILE --out DIR")
    .option("mode", {
      choices: ["dep-pos", "srl", "both"] as const,
      default: "both" as const,
      describe: "Which annotation files to produce",
    })
    .option("in", {
      type: "string",
      demandOption: true,
      describe: "Requirement corpus (blank-line blocks, first line '# <id>')",
    })
    .option("out", {
      type: "string",
      demandOption: true,
      describe: "Directory for <id>.conllu / <id>.srl.json files",
    })
    .option("engine", {
      choices: ["http", "replay"] as const,
      describe: "Annotation backend (default: http when service URLs are " +
        "configured, otherwise replay of the bundled recordings)",
    })
    .option("dep-url", { type: "string", describe: "Dependency service endpoint" })
    .option("srl-url", { type: "string", describe: "Role-labelling service endpoint" })
    .option("recordings", {
      type: "string",
      default: join(packageRoot, "recordings", "fixtures.json"),
      describe: "Recorded responses used by the replay engine",
    })
    .strict()
    .help()
    .parse();

  let corpus: string;
  try {
    corpus = readFileSync(argv.in, "utf-8");
  } catch (err) {
    console.error(`cannot read corpus: ${err}`);
    return 1;
  }

  try {
    const engine = buildEngine(argv);
    const result = await annotateCorpus(corpus, argv.mode as Mode, argv.out, engine);
    for (const warning of result.warnings) {
      console.warn(`warning: ${warning}`);
    }
    console.log(`${result.written.length} annotation file(s) written to ${argv.out}`);
    return 0;
  } catch (err) {
    if (err instanceof EngineError || err instanceof Error) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

main().then((code) => process.exit(code));
