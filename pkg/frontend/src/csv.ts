/**
 * Sweep CSV loading with strict contract validation.
 *
 * The producing tool writes: axis columns first (1 or 2 of J, omega, eta, T,
 * in lexicographic order), then observable columns, then the diagnostics
 * columns residual, clamped, truncation_weight. Anything else is a hard
 * error; figures must never be rendered from a file whose schema drifted.
 */

import * as fs from "node:fs";

export interface SweepTable {
  path: string;
  columns: string[];
  axisNames: string[];
  observableNames: string[];
  rows: number[][];
}

const AXIS_NAMES = new Set(["J", "omega", "eta", "T"]);
const DIAGNOSTICS = ["residual", "clamped", "truncation_weight"];

function parseCell(cell: string, path: string, line: number): number {
  if (cell === "nan") return NaN;
  const value = Number(cell);
  if (cell.trim() === "" || Number.isNaN(value)) {
    throw new Error(`${path}:${line}: unparseable numeric cell ${JSON.stringify(cell)}`);
  }
  return value;
}

export function loadSweepCsv(path: string): SweepTable {
  const text = fs.readFileSync(path, "utf8");
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length < 2) {
    throw new Error(`${path}: sweep CSV needs a header and at least one row`);
  }
  const columns = lines[0].split(",");

  const trailing = columns.slice(-DIAGNOSTICS.length).join(",");
  if (trailing !== DIAGNOSTICS.join(",")) {
    throw new Error(
      `${path}: header contract violated: expected trailing diagnostics ` +
      `columns "${DIAGNOSTICS.join(",")}", found "${trailing}"`);
  }

  let nAxes = 0;
  while (nAxes < columns.length && AXIS_NAMES.has(columns[nAxes])) nAxes += 1;
  if (nAxes < 1 || nAxes > 2) {
    throw new Error(
      `${path}: header contract violated: expected 1 or 2 leading axis ` +
      `columns from {J, omega, eta, T}, found ${nAxes}`);
  }
  const axisNames = columns.slice(0, nAxes);
  const sorted = [...axisNames].sort();
  if (sorted.some((name, i) => name !== axisNames[i])) {
    throw new Error(`${path}: axis columns must be lexicographic, found ${axisNames.join(",")}`);
  }

  const observableNames = columns.slice(nAxes, columns.length - DIAGNOSTICS.length);
  if (observableNames.length === 0) {
    throw new Error(`${path}: header contract violated: no observable columns`);
  }

  const rows = lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== columns.length) {
      throw new Error(
        `${path}:${i + 2}: expected ${columns.length} cells, found ${cells.length}`);
    }
    return cells.map((c) => parseCell(c, path, i + 2));
  });

  return { path, columns, axisNames, observableNames, rows };
}

export function columnIndex(table: SweepTable, name: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new Error(
      `${table.path}: missing required column "${name}"; ` +
      `available: ${table.columns.join(", ")}`);
  }
  return idx;
}

/** Distinct values of one column, in first-appearance order. */
export function distinctValues(table: SweepTable, col: number): number[] {
  const seen: number[] = [];
  for (const row of table.rows) {
    if (!seen.includes(row[col])) seen.push(row[col]);
  }
  return seen;
}
