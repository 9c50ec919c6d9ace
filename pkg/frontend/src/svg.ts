/** Minimal SVG string builders plus axis/tick helpers. */

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function fmtTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 0.01 && a < 10000) {
    return String(Number(v.toPrecision(4)));
  }
  return v.toExponential(1);
}

export function rect(x: number, y: number, w: number, h: number, fill: string,
                     extra = ""): string {
  return `<rect x="${x.toFixed(2)}" y="${y.toFixed(2)}" width="${w.toFixed(2)}" ` +
    `height="${h.toFixed(2)}" fill="${fill}"${extra}/>`;
}

export function line(x1: number, y1: number, x2: number, y2: number,
                     stroke = "#000", width = 1, extra = ""): string {
  return `<line x1="${x1.toFixed(2)}" y1="${y1.toFixed(2)}" x2="${x2.toFixed(2)}" ` +
    `y2="${y2.toFixed(2)}" stroke="${stroke}" stroke-width="${width}"${extra}/>`;
}

export function polyline(points: Array<[number, number]>, stroke: string,
                         width = 1.5, dash = ""): string {
  const pts = points.map(([x, y]) => `${x.toFixed(2)},${y.toFixed(2)}`).join(" ");
  const d = dash ? ` stroke-dasharray="${dash}"` : "";
  return `<polyline points="${pts}" fill="none" stroke="${stroke}" stroke-width="${width}"${d}/>`;
}

export function circle(x: number, y: number, r: number, fill: string): string {
  return `<circle cx="${x.toFixed(2)}" cy="${y.toFixed(2)}" r="${r}" fill="${fill}"/>`;
}

export function text(x: number, y: number, s: string, size = 11,
                     anchor: "start" | "middle" | "end" = "middle",
                     extra = ""): string {
  return `<text x="${x.toFixed(2)}" y="${y.toFixed(2)}" font-size="${size}" ` +
    `font-family="Helvetica, Arial, sans-serif" text-anchor="${anchor}"${extra}>` +
    `${esc(s)}</text>`;
}

/** Round tick positions covering [lo, hi], roughly n of them. */
export function niceTicks(lo: number, hi: number, n = 5): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const step0 = span / Math.max(n - 1, 1);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  let step = mag;
  for (const m of [1, 2, 2.5, 5, 10]) {
    if (m * mag >= step0) {
      step = m * mag;
      break;
    }
  }
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-12 * span; v += step) {
    ticks.push(Math.abs(v) < 1e-12 * span ? 0 : v);
  }
  return ticks;
}

export interface Box {
  x: number;
  y: number;
  w: number;
  h: number;
}

export class Scale {
  constructor(private lo: number, private hi: number,
              private a: number, private b: number) {}
  map(v: number): number {
    const t = this.hi === this.lo ? 0.5 : (v - this.lo) / (this.hi - this.lo);
    return this.a + t * (this.b - this.a);
  }
}

/** Frame, ticks and labels for a panel; returns SVG fragments. */
export function drawAxes(box: Box, xlim: [number, number], ylim: [number, number],
                         xLabel: string, yLabel: string): string[] {
  const sx = new Scale(xlim[0], xlim[1], box.x, box.x + box.w);
  const sy = new Scale(ylim[0], ylim[1], box.y + box.h, box.y);
  const parts: string[] = [];
  parts.push(`<rect x="${box.x}" y="${box.y}" width="${box.w}" height="${box.h}" ` +
    `fill="none" stroke="#000" stroke-width="1"/>`);
  for (const v of niceTicks(xlim[0], xlim[1])) {
    const px = sx.map(v);
    parts.push(line(px, box.y + box.h, px, box.y + box.h + 4));
    parts.push(text(px, box.y + box.h + 16, fmtTick(v), 10));
  }
  for (const v of niceTicks(ylim[0], ylim[1])) {
    const py = sy.map(v);
    parts.push(line(box.x - 4, py, box.x, py));
    parts.push(text(box.x - 7, py + 3.5, fmtTick(v), 10, "end"));
  }
  parts.push(text(box.x + box.w / 2, box.y + box.h + 32, xLabel, 12));
  parts.push(text(box.x - 38, box.y + box.h / 2, yLabel, 12, "middle",
    ` transform="rotate(-90 ${box.x - 38} ${box.y + box.h / 2})"`));
  return parts;
}

export function svgDocument(width: number, height: number, body: string[]): string {
  return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">\n<rect width="${width}" height="${height}" fill="#fff"/>\n` +
    body.join("\n") + "\n</svg>\n";
}

export const SERIES_COLORS = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];
