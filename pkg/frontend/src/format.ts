/** Number formatting for the statistics table and panels. */

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Counts and mean/SD columns print as integers. */
export function asCount(value: number): string {
  return Math.round(value).toString();
}

/** Deviation percent prints with one decimal, e.g. "10.0%". */
export function asPercent(value: number): string {
  return `${value.toFixed(1)}%`;
}

export function asScore(value: number): string {
  return value.toFixed(2);
}
