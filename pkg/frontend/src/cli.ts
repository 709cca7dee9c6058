#!/usr/bin/env node
/**
 * Render an experiment summary CSV to an SVG chart.
 *
 *   budgetbandit-plots --input comparison.csv --kind comparison --out plot.svg
 *   budgetbandit-plots --input summary.csv --kind band --out band.svg
 *
 * Exits 1 with a schema diagnostic on malformed input.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";
import { pathToFileURL } from "node:url";

import { SchemaError, parseSummary } from "./csv.js";
import { bandChart, comparisonChart } from "./svg.js";

export function run(argv: string[]): number {
  let values;
  try {
    ({ values } = parseArgs({
      args: argv,
      options: {
        input: { type: "string" },
        kind: { type: "string" },
        out: { type: "string" },
        title: { type: "string" },
      },
    }));
  } catch (e) {
    console.error((e as Error).message);
    return 1;
  }
  const { input, kind, out, title } = values;
  if (!input || !out || (kind !== "comparison" && kind !== "band")) {
    console.error(
      "usage: budgetbandit-plots --input <summary.csv> --kind comparison|band --out <plot.svg> [--title <text>]",
    );
    return 1;
  }
  let svg: string;
  try {
    const table = parseSummary(readFileSync(input, "utf8"));
    svg =
      kind === "comparison"
        ? comparisonChart(table, { title })
        : bandChart(table, { title });
  } catch (e) {
    if (e instanceof SchemaError) {
      console.error(`${input}: not a valid summary CSV: ${e.message}`);
    } else {
      console.error((e as Error).message);
    }
    return 1;
  }
  writeFileSync(out, svg);
  return 0;
}

const entry = process.argv[1];
if (entry && import.meta.url === pathToFileURL(entry).href) {
  process.exit(run(process.argv.slice(2)));
}
