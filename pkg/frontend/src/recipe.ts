/**
 * Figure recipe schema and loading.
 *
 * A recipe is a JSON object:
 *   kind          "heatmap" | "lines" | "spectrum"
 *   inputs        one or more sweep CSV paths (relative to the recipe file)
 *   output        image path (SVG; relative to the recipe file)
 *   value_column  observable column to plot; heatmaps default to every
 *                 observable column, lines default to the first
 *   x_label, y_label, title   axis/figure labels (optional)
 *   color_bounds  [lo, hi] for heatmap color scale (default [0, 1])
 *   series_column axis column splitting one CSV into several line series
 *   series_labels legend labels, one per series (optional)
 */

import * as fs from "node:fs";
import * as path from "node:path";
import { z } from "zod";

const RecipeSchema = z.object({
  kind: z.enum(["heatmap", "lines", "spectrum"]),
  inputs: z.array(z.string()).min(1),
  output: z.string(),
  value_column: z.string().optional(),
  x_label: z.string().optional(),
  y_label: z.string().optional(),
  title: z.string().optional(),
  color_bounds: z.tuple([z.number(), z.number()]).optional(),
  series_column: z.string().optional(),
  series_labels: z.array(z.string()).optional(),
}).strict();

export type Recipe = z.infer<typeof RecipeSchema> & { baseDir: string };

export function loadRecipe(recipePath: string): Recipe {
  let raw: unknown;
  try {
    raw = JSON.parse(fs.readFileSync(recipePath, "utf8"));
  } catch (err) {
    throw new Error(`cannot read recipe ${recipePath}: ${(err as Error).message}`);
  }
  const parsed = RecipeSchema.safeParse(raw);
  if (!parsed.success) {
    const issues = parsed.error.issues
      .map((i) => `${i.path.join(".") || "<root>"}: ${i.message}`)
      .join("; ");
    throw new Error(`invalid recipe ${recipePath}: ${issues}`);
  }
  return { ...parsed.data, baseDir: path.dirname(path.resolve(recipePath)) };
}

export function resolveInput(recipe: Recipe, p: string): string {
  return path.isAbsolute(p) ? p : path.join(recipe.baseDir, p);
}
