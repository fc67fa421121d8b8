/** Deterministic force layout.
 *
 * Positions depend only on the document content: the simulation seeds its
 * generator with a hash of the ids and edges, so reloading the same graph
 * (or taking a screenshot in CI) always produces the same picture.
 */
import { GraphDocument } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export function fnv1a(text: string): number {
  let hash = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193);
  }
  return hash >>> 0;
}

export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ITERATIONS = 200;
const SPRING_LENGTH = 140;
const SPRING = 0.02;
const REPULSION = 22000;
const CENTERING = 0.012;

export function layoutGraph(
  doc: GraphDocument,
  width = 720,
  height = 480,
): Map<string, Point> {
  const ids = doc.arguments.map((a) => a.id);
  const seedText = ids.join("|") + "#" + doc.edges.map((e) => `${e.from}>${e.to}:${e.polarity}`).join("|");
  const rand = mulberry32(fnv1a(seedText));
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 3;
  const pos = ids.map((_, k) => {
    const angle = (2 * Math.PI * k) / Math.max(ids.length, 1) + rand() * 0.5;
    return {
      x: cx + radius * Math.cos(angle) + (rand() - 0.5) * 40,
      y: cy + radius * Math.sin(angle) + (rand() - 0.5) * 40,
    };
  });
  const index = new Map(ids.map((id, k) => [id, k]));
  const springs = doc.edges
    .filter((e) => e.from !== e.to)
    .map((e) => [index.get(e.from)!, index.get(e.to)!] as const);

  for (let step = 0; step < ITERATIONS; step++) {
    const fx = new Array(pos.length).fill(0);
    const fy = new Array(pos.length).fill(0);
    for (let i = 0; i < pos.length; i++) {
      for (let j = i + 1; j < pos.length; j++) {
        const dx = pos[i].x - pos[j].x;
        const dy = pos[i].y - pos[j].y;
        const sq = Math.max(dx * dx + dy * dy, 25);
        const push = REPULSION / sq;
        const norm = Math.sqrt(sq);
        fx[i] += (dx / norm) * push;
        fy[i] += (dy / norm) * push;
        fx[j] -= (dx / norm) * push;
        fy[j] -= (dy / norm) * push;
      }
    }
    for (const [a, b] of springs) {
      const dx = pos[b].x - pos[a].x;
      const dy = pos[b].y - pos[a].y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = SPRING * (dist - SPRING_LENGTH);
      fx[a] += (dx / dist) * pull;
      fy[a] += (dy / dist) * pull;
      fx[b] -= (dx / dist) * pull;
      fy[b] -= (dy / dist) * pull;
    }
    const cooling = 1 - step / ITERATIONS;
    for (let i = 0; i < pos.length; i++) {
      fx[i] += (cx - pos[i].x) * CENTERING;
      fy[i] += (cy - pos[i].y) * CENTERING;
      pos[i].x += Math.max(-12, Math.min(12, fx[i])) * cooling;
      pos[i].y += Math.max(-12, Math.min(12, fy[i])) * cooling;
      pos[i].x = Math.max(40, Math.min(width - 40, pos[i].x));
      pos[i].y = Math.max(40, Math.min(height - 40, pos[i].y));
    }
  }
  return new Map(ids.map((id, k) => [id, {
    x: Math.round(pos[k].x * 100) / 100,
    y: Math.round(pos[k].y * 100) / 100,
  }]));
}
