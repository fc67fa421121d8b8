/** Display formatting: six decimals on screen, full precision in state. */

export function formatDegree(value: number): string {
  return value.toFixed(6);
}

export function formatWeight(value: number): string {
  // weights render exactly as the user typed them where possible
  const text = String(value);
  return text.length <= 12 ? text : value.toPrecision(8);
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
