/** Role label -> highlight color. Fixed table for the common roles plus a
 * deterministic hash fallback, so screenshots stay stable across builds. */

const ROLE_COLORS: Record<string, string> = {
  AGT: "#bfdbfe",
  THM: "#fecaca",
  EXP: "#ddd6fe",
  GOL: "#bbf7d0",
  SRC: "#fde68a",
  LOC: "#a7f3d0",
  BEN: "#fbcfe8",
  COM: "#e9d5ff",
  INS: "#fed7aa",
  TARGET: "#e5e7eb",
};

export function roleColor(label: string): string {
  const fixed = ROLE_COLORS[label];
  if (fixed !== undefined) return fixed;
  // djb2 over code points -> pastel hue
  let hash = 5381;
  for (const ch of label) {
    hash = ((hash * 33) ^ (ch.codePointAt(0) ?? 0)) >>> 0;
  }
  return `hsl(${hash % 360}, 70%, 85%)`;
}
