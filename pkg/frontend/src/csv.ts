/**
 * Parser for the experiment summary CSVs.
 *
 * Layout: an optional metadata comment line `# z_star=<value>`, then the
 * header `beta,n,mean_avg_outcome,sd,ci_lo,ci_hi,mean_avg_cost,regret`,
 * then one row per (beta, checkpoint). A multi-beta comparison file uses the
 * same schema with several beta values interleaved.
 */

export interface SummaryRow {
  beta: number;
  n: number;
  meanAvgOutcome: number;
  sd: number;
  ciLo: number;
  ciHi: number;
  meanAvgCost: number;
  regret: number;
}

export interface SummaryTable {
  zStar: number | null;
  rows: SummaryRow[];
}

export const EXPECTED_HEADER =
  "beta,n,mean_avg_outcome,sd,ci_lo,ci_hi,mean_avg_cost,regret";

export class SchemaError extends Error {}

function num(field: string, cell: string, line: number): number {
  const v = Number(cell);
  if (cell.trim() === "" || Number.isNaN(v)) {
    throw new SchemaError(
      `line ${line}: field "${field}" is not a number (got "${cell}")`,
    );
  }
  return v;
}

export function parseSummary(text: string): SummaryTable {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  let zStar: number | null = null;
  let i = 0;
  const first = lines[0];
  if (first !== undefined && first.startsWith("#")) {
    const m = first.match(/^#\s*z_star=(.+)$/);
    if (m) zStar = num("z_star", m[1]!, 1);
    i = 1;
  }
  if (lines[i] !== EXPECTED_HEADER) {
    throw new SchemaError(
      `header mismatch: expected "${EXPECTED_HEADER}", got "${lines[i] ?? "<end of file>"}"`,
    );
  }
  const rows: SummaryRow[] = [];
  for (let j = i + 1; j < lines.length; j++) {
    const cells = lines[j]!.split(",");
    if (cells.length !== 8) {
      throw new SchemaError(
        `line ${j + 1}: expected 8 fields, got ${cells.length}`,
      );
    }
    rows.push({
      beta: num("beta", cells[0]!, j + 1),
      n: num("n", cells[1]!, j + 1),
      meanAvgOutcome: num("mean_avg_outcome", cells[2]!, j + 1),
      sd: num("sd", cells[3]!, j + 1),
      ciLo: num("ci_lo", cells[4]!, j + 1),
      ciHi: num("ci_hi", cells[5]!, j + 1),
      meanAvgCost: num("mean_avg_cost", cells[6]!, j + 1),
      regret: num("regret", cells[7]!, j + 1),
    });
  }
  if (rows.length === 0) throw new SchemaError("no data rows");
  return { zStar, rows };
}

/** Distinct beta values in first-appearance order. */
export function betas(table: SummaryTable): number[] {
  const seen: number[] = [];
  for (const r of table.rows) if (!seen.includes(r.beta)) seen.push(r.beta);
  return seen;
}

export function rowsForBeta(table: SummaryTable, beta: number): SummaryRow[] {
  return table.rows.filter((r) => r.beta === beta);
}
