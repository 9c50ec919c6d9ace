/**
 * Heatmap panels from two-axis sweep grids.
 *
 * One panel per (input file x value column); a grid cell at row-major
 * position (i0, i1) is colored by its observable value on the shared
 * color scale (default [0, 1], the natural range of negativity-valued
 * observables).
 */

import * as path from "node:path";
import { SweepTable, columnIndex, distinctValues } from "./csv.js";
import { colormap } from "./color.js";
import { Recipe } from "./recipe.js";
import { Box, Scale, drawAxes, fmtTick, niceTicks, rect, svgDocument, text } from "./svg.js";

const PANEL_W = 240;
const PANEL_H = 240;
const MARGIN_L = 64;
const MARGIN_R = 30;
const MARGIN_T = 46;
const MARGIN_B = 56;
const GAP = 34;
const BAR_W = 16;

interface Panel {
  table: SweepTable;
  column: number;
  label: string;
}

function panelsOf(recipe: Recipe, tables: SweepTable[]): Panel[] {
  const panels: Panel[] = [];
  for (const table of tables) {
    if (table.axisNames.length !== 2) {
      throw new Error(`${table.path}: heatmap needs a two-axis sweep, ` +
        `found axes ${table.axisNames.join(",")}`);
    }
    const cols = recipe.value_column
      ? [recipe.value_column]
      : table.observableNames;
    for (const name of cols) {
      const stem = path.basename(table.path).replace(/\.csv$/, "");
      const label = tables.length > 1 ? `${stem}` : name;
      panels.push({ table, column: columnIndex(table, name), label });
    }
  }
  return panels;
}

function renderPanel(panel: Panel, box: Box, bounds: [number, number],
                     recipe: Recipe): string[] {
  const { table, column } = panel;
  const v0 = distinctValues(table, 0);
  const v1 = distinctValues(table, 1);
  if (v0.length * v1.length !== table.rows.length) {
    throw new Error(`${table.path}: rows do not form a full ` +
      `${v0.length} x ${v1.length} grid`);
  }
  // axis 1 varies fastest and runs along x; axis 0 along y, increasing upward
  const xlim: [number, number] = [Math.min(...v1), Math.max(...v1)];
  const ylim: [number, number] = [Math.min(...v0), Math.max(...v0)];
  const parts: string[] = [];
  const cw = box.w / v1.length;
  const ch = box.h / v0.length;
  for (let i0 = 0; i0 < v0.length; i0++) {
    for (let i1 = 0; i1 < v1.length; i1++) {
      const value = table.rows[i0 * v1.length + i1][panel.column];
      const t = (value - bounds[0]) / (bounds[1] - bounds[0]);
      const x = box.x + i1 * cw;
      const y = box.y + box.h - (i0 + 1) * ch;
      parts.push(rect(x, y, cw + 0.5, ch + 0.5, colormap(t)));
    }
  }
  parts.push(...drawAxes(box, xlim, ylim,
    recipe.x_label ?? table.axisNames[1],
    recipe.y_label ?? table.axisNames[0]));
  parts.push(text(box.x + box.w / 2, box.y - 8, panel.label, 12));
  return parts;
}

function renderColorbar(box: Box, bounds: [number, number]): string[] {
  const parts: string[] = [];
  const steps = 64;
  for (let i = 0; i < steps; i++) {
    const y = box.y + box.h - ((i + 1) / steps) * box.h;
    parts.push(rect(box.x, y, BAR_W, box.h / steps + 0.5, colormap((i + 0.5) / steps)));
  }
  parts.push(`<rect x="${box.x}" y="${box.y}" width="${BAR_W}" height="${box.h}" ` +
    `fill="none" stroke="#000"/>`);
  const scale = new Scale(bounds[0], bounds[1], box.y + box.h, box.y);
  for (const v of niceTicks(bounds[0], bounds[1], 5)) {
    parts.push(text(box.x + BAR_W + 6, scale.map(v) + 3.5, fmtTick(v), 10, "start"));
  }
  return parts;
}

export function renderHeatmap(recipe: Recipe, tables: SweepTable[]): string {
  const panels = panelsOf(recipe, tables);
  const bounds = recipe.color_bounds ?? [0, 1];
  if (!(bounds[1] > bounds[0])) {
    throw new Error(`color_bounds must be increasing, got [${bounds}]`);
  }
  const width = MARGIN_L + panels.length * (PANEL_W + GAP) + BAR_W + 50 + MARGIN_R;
  const height = MARGIN_T + PANEL_H + MARGIN_B;
  const body: string[] = [];
  panels.forEach((panel, i) => {
    const box: Box = { x: MARGIN_L + i * (PANEL_W + GAP), y: MARGIN_T,
                       w: PANEL_W, h: PANEL_H };
    body.push(...renderPanel(panel, box, bounds, recipe));
  });
  const barBox: Box = { x: MARGIN_L + panels.length * (PANEL_W + GAP), y: MARGIN_T,
                        w: BAR_W, h: PANEL_H };
  body.push(...renderColorbar(barBox, bounds));
  if (recipe.title) {
    body.push(text(width / 2, 20, recipe.title, 14));
  }
  return svgDocument(width, height, body);
}
