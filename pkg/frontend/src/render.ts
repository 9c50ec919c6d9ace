/** Recipe dispatch: load inputs, render the figure kind, write the image. */

import * as fs from "node:fs";
import * as path from "node:path";
import { loadSweepCsv } from "./csv.js";
import { renderHeatmap } from "./heatmap.js";
import { renderLines } from "./lines.js";
import { Recipe, loadRecipe, resolveInput } from "./recipe.js";
import { renderSpectrum } from "./spectrum.js";

export function renderRecipe(recipe: Recipe): string {
  const tables = recipe.inputs.map((p) => loadSweepCsv(resolveInput(recipe, p)));
  let svg: string;
  switch (recipe.kind) {
    case "heatmap":
      svg = renderHeatmap(recipe, tables);
      break;
    case "lines":
      svg = renderLines(recipe, tables);
      break;
    case "spectrum":
      svg = renderSpectrum(recipe, tables);
      break;
  }
  const outPath = resolveInput(recipe, recipe.output);
  fs.mkdirSync(path.dirname(outPath), { recursive: true });
  fs.writeFileSync(outPath, svg);
  return outPath;
}

export function renderRecipeFile(recipePath: string): string {
  return renderRecipe(loadRecipe(recipePath));
}
