/**
 * Line plots of one observable against a single swept axis.
 *
 * Series come from multiple input files, from splitting a two-axis sweep
 * on `series_column`, or both. A single-point series degenerates to a
 * lone marker, which is valid.
 */

import * as path from "node:path";
import { SweepTable, columnIndex, distinctValues } from "./csv.js";
import { Recipe } from "./recipe.js";
import { Box, SERIES_COLORS, Scale, circle, drawAxes, fmtTick, polyline,
         svgDocument, text } from "./svg.js";

const PLOT_W = 420;
const PLOT_H = 300;
const MARGIN_L = 64;
const MARGIN_T = 40;
const MARGIN_B = 56;
const MARGIN_R = 170;

export interface Series {
  label: string;
  points: Array<[number, number]>;
}

export function collectSeries(recipe: Recipe, tables: SweepTable[]): Series[] {
  const series: Series[] = [];
  for (const table of tables) {
    const stem = path.basename(table.path).replace(/\.csv$/, "");
    const valueName = recipe.value_column ?? table.observableNames[0];
    const vCol = columnIndex(table, valueName);
    if (recipe.series_column !== undefined) {
      const sCol = table.axisNames.indexOf(recipe.series_column);
      if (sCol < 0) {
        throw new Error(`${table.path}: series_column "${recipe.series_column}" ` +
          `is not an axis (axes: ${table.axisNames.join(",")})`);
      }
      if (table.axisNames.length !== 2) {
        throw new Error(`${table.path}: series_column needs a two-axis sweep`);
      }
      const xCol = 1 - sCol;
      for (const sv of distinctValues(table, sCol)) {
        const pts = table.rows.filter((r) => r[sCol] === sv)
          .map((r) => [r[xCol], r[vCol]] as [number, number]);
        const label = `${tables.length > 1 ? stem + " " : ""}` +
          `${recipe.series_column}=${fmtTick(sv)}`;
        series.push({ label, points: pts });
      }
    } else {
      if (table.axisNames.length !== 1) {
        throw new Error(`${table.path}: lines need a single-axis sweep ` +
          `(or pass series_column), found axes ${table.axisNames.join(",")}`);
      }
      const pts = table.rows.map((r) => [r[0], r[vCol]] as [number, number]);
      series.push({ label: stem, points: pts });
    }
  }
  if (recipe.series_labels) {
    if (recipe.series_labels.length !== series.length) {
      throw new Error(`series_labels has ${recipe.series_labels.length} entries ` +
        `but there are ${series.length} series`);
    }
    recipe.series_labels.forEach((label, i) => { series[i].label = label; });
  }
  return series;
}

export function renderLines(recipe: Recipe, tables: SweepTable[]): string {
  const series = collectSeries(recipe, tables);
  const xs = series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = series.flatMap((s) => s.points.map((p) => p[1])).filter((v) => !Number.isNaN(v));
  if (ys.length === 0) {
    throw new Error("no finite values to plot");
  }
  const xlim: [number, number] = [Math.min(...xs), Math.max(...xs)];
  const xdom: [number, number] = xlim[0] === xlim[1]
    ? [xlim[0] - 1, xlim[1] + 1] : xlim;
  let ylim: [number, number] = [Math.min(0, Math.min(...ys)), Math.max(...ys)];
  if (ylim[1] === ylim[0]) ylim = [ylim[0] - 0.5, ylim[1] + 0.5];
  ylim[1] += 0.05 * (ylim[1] - ylim[0]);

  const box: Box = { x: MARGIN_L, y: MARGIN_T, w: PLOT_W, h: PLOT_H };
  const sx = new Scale(xdom[0], xdom[1], box.x, box.x + box.w);
  const sy = new Scale(ylim[0], ylim[1], box.y + box.h, box.y);

  const xName = tables[0].axisNames.length === 1
    ? tables[0].axisNames[0]
    : tables[0].axisNames[1 - tables[0].axisNames.indexOf(recipe.series_column ?? "")];
  const yName = recipe.value_column ?? tables[0].observableNames[0];
  const body = drawAxes(box, xdom, ylim,
    recipe.x_label ?? xName, recipe.y_label ?? yName);

  series.forEach((s, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const pts = s.points.filter((p) => !Number.isNaN(p[1]))
      .map(([x, y]) => [sx.map(x), sy.map(y)] as [number, number]);
    if (pts.length > 1) body.push(polyline(pts, color));
    for (const [px, py] of pts) body.push(circle(px, py, 2.5, color));
    const ly = MARGIN_T + 14 + i * 16;
    const lx = box.x + box.w + 14;
    body.push(polyline([[lx, ly - 4], [lx + 18, ly - 4]], color, 2));
    body.push(text(lx + 24, ly, s.label, 11, "start"));
  });
  if (recipe.title) {
    body.push(text((MARGIN_L + PLOT_W + MARGIN_R) / 2, 18, recipe.title, 14));
  }
  return svgDocument(MARGIN_L + PLOT_W + MARGIN_R, MARGIN_T + PLOT_H + MARGIN_B, body);
}
