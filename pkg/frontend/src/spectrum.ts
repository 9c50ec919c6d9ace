/**
 * Spectrum plots: every E<k> column against the swept axis, with an inset
 * showing the gap between the two lowest levels.
 */

import { SweepTable, columnIndex } from "./csv.js";
import { Recipe } from "./recipe.js";
import { Box, Scale, drawAxes, polyline, svgDocument, text } from "./svg.js";

const PLOT_W = 420;
const PLOT_H = 320;
const MARGIN_L = 64;
const MARGIN_T = 40;
const MARGIN_B = 56;
const MARGIN_R = 40;

export function renderSpectrum(recipe: Recipe, tables: SweepTable[]): string {
  if (tables.length !== 1) {
    throw new Error(`spectrum figures take exactly one input, got ${tables.length}`);
  }
  const table = tables[0];
  if (table.axisNames.length !== 1) {
    throw new Error(`${table.path}: spectrum needs a single-axis sweep`);
  }
  const energyCols = table.observableNames.filter((c) => /^E\d+$/.test(c));
  if (energyCols.length === 0) {
    throw new Error(`${table.path}: no E<k> energy columns found`);
  }
  const gapCol = columnIndex(table, "gap");

  const xs = table.rows.map((r) => r[0]);
  const xlim: [number, number] = [Math.min(...xs), Math.max(...xs)];
  const values = energyCols.flatMap((c) => {
    const idx = columnIndex(table, c);
    return table.rows.map((r) => r[idx]).filter((v) => !Number.isNaN(v));
  });
  const ylim: [number, number] = [Math.min(...values), Math.max(...values)];
  const pad = 0.05 * (ylim[1] - ylim[0] || 1);

  const box: Box = { x: MARGIN_L, y: MARGIN_T, w: PLOT_W, h: PLOT_H };
  const sx = new Scale(xlim[0], xlim[1], box.x, box.x + box.w);
  const sy = new Scale(ylim[0] - pad, ylim[1] + pad, box.y + box.h, box.y);
  const body = drawAxes(box, xlim, [ylim[0] - pad, ylim[1] + pad],
    recipe.x_label ?? table.axisNames[0], recipe.y_label ?? "energy");

  energyCols.forEach((c, i) => {
    const idx = columnIndex(table, c);
    const pts = table.rows
      .filter((r) => !Number.isNaN(r[idx]))
      .map((r) => [sx.map(r[0]), sy.map(r[idx])] as [number, number]);
    body.push(polyline(pts, i === 0 ? "#6a0dad" : i === 1 ? "#2ca02c" : "#555",
      i < 2 ? 1.8 : 1.0, i < 2 ? "" : "4,3"));
  });

  // gap inset, top center
  const inset: Box = { x: box.x + box.w * 0.36, y: box.y + 12,
                       w: box.w * 0.30, h: box.h * 0.26 };
  const gaps = table.rows.map((r) => r[gapCol]).filter((v) => !Number.isNaN(v));
  const gmax = Math.max(...gaps, 1e-12);
  const gx = new Scale(xlim[0], xlim[1], inset.x, inset.x + inset.w);
  const gy = new Scale(0, gmax * 1.05, inset.y + inset.h, inset.y);
  body.push(`<rect x="${inset.x}" y="${inset.y}" width="${inset.w}" height="${inset.h}" ` +
    `fill="#fff" stroke="#000" stroke-width="0.8"/>`);
  const gapPts = table.rows.filter((r) => !Number.isNaN(r[gapCol]))
    .map((r) => [gx.map(r[0]), gy.map(r[gapCol])] as [number, number]);
  body.push(polyline(gapPts, "#d62728", 1.4));
  body.push(text(inset.x + inset.w / 2, inset.y + inset.h + 12, "gap", 10));

  if (recipe.title) {
    body.push(text((MARGIN_L + PLOT_W + MARGIN_R) / 2, 18, recipe.title, 14));
  }
  return svgDocument(MARGIN_L + PLOT_W + MARGIN_R, MARGIN_T + PLOT_H + MARGIN_B, body);
}
