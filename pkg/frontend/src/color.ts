/** Viridis-style colormap sampled at 20 stops, linearly interpolated. */

const STOPS: Array<[number, number, number]> = [
  [68, 1, 84], [71, 18, 101], [72, 36, 117], [70, 52, 128],
  [65, 68, 135], [59, 82, 139], [52, 96, 141], [46, 108, 142],
  [41, 121, 142], [36, 134, 142], [31, 147, 140], [30, 160, 135],
  [37, 172, 127], [53, 183, 116], [78, 194, 101], [108, 205, 82],
  [143, 213, 60], [181, 219, 43], [218, 223, 30], [253, 231, 37],
];

export const NAN_COLOR = "#d0d0d0";

export function colormap(t: number): string {
  if (Number.isNaN(t)) return NAN_COLOR;
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (STOPS.length - 1);
  const i = Math.min(Math.floor(pos), STOPS.length - 2);
  const f = pos - i;
  const mix = (a: number, b: number) => Math.round(a + f * (b - a));
  const [r, g, b] = [0, 1, 2].map((c) => mix(STOPS[i][c], STOPS[i + 1][c]));
  return `rgb(${r},${g},${b})`;
}
