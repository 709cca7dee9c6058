/**
 * Dependency-free SVG rendering of the two chart kinds:
 *
 * - "comparison": one running-average-outcome curve per beta on a log-scaled
 *   period axis, plus a dashed horizontal reference line at the optimal
 *   value z* when the CSV carries one.
 * - "band": a single mean curve with the 95% confidence band shaded behind
 *   it. Deterministic inputs (ci_lo == ci_hi everywhere) produce a band
 *   polygon of exactly zero height.
 */

import { SummaryTable, betas, rowsForBeta } from "./csv.js";

export interface ChartOptions {
  width?: number;
  height?: number;
  title?: string;
}

const MARGIN = { top: 32, right: 24, bottom: 44, left: 56 };
const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
];

interface Scale {
  (v: number): number;
}

function logScale(lo: number, hi: number, r0: number, r1: number): Scale {
  const a = Math.log10(Math.max(lo, 1));
  const b = Math.log10(hi);
  return (v) => r0 + ((Math.log10(Math.max(v, 1)) - a) / (b - a || 1)) * (r1 - r0);
}

function linScale(lo: number, hi: number, r0: number, r1: number): Scale {
  return (v) => r0 + ((v - lo) / (hi - lo || 1)) * (r1 - r0);
}

const fmt = (v: number) => String(Number(v.toPrecision(6)));

function polyline(
  xs: number[],
  ys: number[],
  sx: Scale,
  sy: Scale,
  color: string,
  cls: string,
): string {
  const pts = xs
    .map((x, i) => `${fmt(sx(x))},${fmt(sy(ys[i]!))}`)
    .join(" ");
  return `<polyline class="${cls}" fill="none" stroke="${color}" stroke-width="1.5" points="${pts}"/>`;
}

function frame(
  sx: Scale,
  sy: Scale,
  xTicks: number[],
  yTicks: number[],
  width: number,
  height: number,
  title: string,
): string {
  const parts: string[] = [];
  const x0 = MARGIN.left;
  const x1 = width - MARGIN.right;
  const y0 = height - MARGIN.bottom;
  const y1 = MARGIN.top;
  parts.push(
    `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" fill="none" stroke="#333"/>`,
  );
  for (const t of xTicks) {
    const x = fmt(sx(t));
    parts.push(`<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 4}" stroke="#333"/>`);
    parts.push(
      `<text x="${x}" y="${y0 + 18}" font-size="11" text-anchor="middle">${t}</text>`,
    );
  }
  for (const t of yTicks) {
    const y = fmt(sy(t));
    parts.push(`<line x1="${x0 - 4}" y1="${y}" x2="${x0}" y2="${y}" stroke="#333"/>`);
    parts.push(
      `<text x="${x0 - 8}" y="${y}" font-size="11" text-anchor="end" dominant-baseline="middle">${fmt(t)}</text>`,
    );
  }
  if (title) {
    parts.push(
      `<text x="${(x0 + x1) / 2}" y="${y1 - 10}" font-size="13" text-anchor="middle">${title}</text>`,
    );
  }
  return parts.join("\n");
}

function yTickValues(lo: number, hi: number): number[] {
  if (hi === lo) return [lo];
  const step = Math.pow(10, Math.floor(Math.log10((hi - lo) / 4)));
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-12; v += step) {
    ticks.push(Number(v.toPrecision(10)));
  }
  return ticks.length > 8 ? ticks.filter((_, i) => i % 2 === 0) : ticks;
}

function open(width: number, height: number): string {
  return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="sans-serif">`;
}

/** One curve per beta, with a dashed z* reference line. */
export function comparisonChart(
  table: SummaryTable,
  options: ChartOptions = {},
): string {
  const width = options.width ?? 720;
  const height = options.height ?? 440;
  const bs = betas(table);
  const ns = table.rows.map((r) => r.n);
  const vals = table.rows.map((r) => r.meanAvgOutcome);
  if (table.zStar !== null) vals.push(table.zStar);
  const lo = Math.min(...vals);
  const hi = Math.max(...vals);
  const pad = (hi - lo || 1) * 0.05;
  const sx = logScale(Math.min(...ns), Math.max(...ns), MARGIN.left, width - MARGIN.right);
  const sy = linScale(lo - pad, hi + pad, height - MARGIN.bottom, MARGIN.top);

  const decades: number[] = [];
  for (let d = 0; Math.pow(10, d) <= Math.max(...ns); d++) decades.push(Math.pow(10, d));
  const parts = [open(width, height)];
  parts.push(
    frame(sx, sy, decades, yTickValues(lo, hi), width, height,
      options.title ?? "mean running average outcome by schedule density"),
  );
  if (table.zStar !== null) {
    const y = fmt(sy(table.zStar));
    parts.push(
      `<line class="reference" x1="${MARGIN.left}" y1="${y}" x2="${width - MARGIN.right}" y2="${y}" stroke="#555" stroke-dasharray="6 4"/>`,
    );
    parts.push(
      `<text x="${width - MARGIN.right - 4}" y="${Number(y) - 5}" font-size="11" text-anchor="end" fill="#555">z* = ${fmt(table.zStar)}</text>`,
    );
  }
  bs.forEach((b, i) => {
    const rows = rowsForBeta(table, b);
    const color = PALETTE[i % PALETTE.length]!;
    parts.push(
      polyline(rows.map((r) => r.n), rows.map((r) => r.meanAvgOutcome), sx, sy, color, "curve"),
    );
    parts.push(
      `<text x="${width - MARGIN.right + 4}" y="${fmt(sy(rows[rows.length - 1]!.meanAvgOutcome))}" font-size="11" fill="${color}" dominant-baseline="middle">β=${b}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("\n");
}

/** Mean curve of a single-beta summary with its shaded 95% band. */
export function bandChart(
  table: SummaryTable,
  options: ChartOptions = {},
): string {
  const bs = betas(table);
  if (bs.length !== 1) {
    throw new Error(
      `band chart needs a single-beta summary, found betas {${bs.join(", ")}}`,
    );
  }
  const width = options.width ?? 720;
  const height = options.height ?? 440;
  const rows = table.rows;
  const vals = rows.flatMap((r) => [r.ciLo, r.ciHi]);
  if (table.zStar !== null) vals.push(table.zStar);
  const lo = Math.min(...vals);
  const hi = Math.max(...vals);
  const pad = (hi - lo || 1) * 0.05;
  const ns = rows.map((r) => r.n);
  const sx = logScale(Math.min(...ns), Math.max(...ns), MARGIN.left, width - MARGIN.right);
  const sy = linScale(lo - pad, hi + pad, height - MARGIN.bottom, MARGIN.top);

  const decades: number[] = [];
  for (let d = 0; Math.pow(10, d) <= Math.max(...ns); d++) decades.push(Math.pow(10, d));
  const parts = [open(width, height)];
  parts.push(
    frame(sx, sy, decades, yTickValues(lo, hi), width, height,
      options.title ?? `mean outcome with 95% band (β=${bs[0]})`),
  );
  const upper = rows.map((r) => `${fmt(sx(r.n))},${fmt(sy(r.ciHi))}`);
  const lower = [...rows]
    .reverse()
    .map((r) => `${fmt(sx(r.n))},${fmt(sy(r.ciLo))}`);
  parts.push(
    `<polygon class="band" fill="#1f77b4" fill-opacity="0.2" stroke="none" points="${[...upper, ...lower].join(" ")}"/>`,
  );
  if (table.zStar !== null) {
    const y = fmt(sy(table.zStar));
    parts.push(
      `<line class="reference" x1="${MARGIN.left}" y1="${y}" x2="${width - MARGIN.right}" y2="${y}" stroke="#555" stroke-dasharray="6 4"/>`,
    );
  }
  parts.push(
    polyline(ns, rows.map((r) => r.meanAvgOutcome), sx, sy, "#1f77b4", "curve"),
  );
  parts.push("</svg>");
  return parts.join("\n");
}

/** Maximum vertical extent of the band polygon, in pixels. Zero means the
 * band is degenerate (deterministic input). */
export function bandHeight(svg: string): number {
  const m = svg.match(/class="band"[^>]*points="([^"]+)"/);
  if (!m) return 0;
  const pts = m[1]!.split(" ").map((p) => p.split(",").map(Number));
  const byX = new Map<number, number[]>();
  for (const [x, y] of pts as [number, number][]) {
    const ys = byX.get(x) ?? [];
    ys.push(y);
    byX.set(x, ys);
  }
  let h = 0;
  for (const ys of byX.values()) h = Math.max(h, Math.max(...ys) - Math.min(...ys));
  return h;
}
