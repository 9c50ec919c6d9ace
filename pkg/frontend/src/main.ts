#!/usr/bin/env node
/** render_figure <recipe.json>: render a sweep-CSV figure to SVG. */

import { renderRecipeFile } from "./render.js";

const args = process.argv.slice(2);
if (args.length !== 1 || args[0] === "--help" || args[0] === "-h") {
  process.stderr.write("usage: render_figure <recipe.json>\n");
  process.exit(args.length === 1 ? 0 : 1);
}

try {
  const out = renderRecipeFile(args[0]);
  process.stdout.write(`${out}\n`);
} catch (err) {
  process.stderr.write(`render_figure: ${(err as Error).message}\n`);
  process.exit(1);
}
