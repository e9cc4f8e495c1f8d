import { QuiverJson, totalVertices } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface ArrowSpec {
  from: number; // 0-based vertex indices
  to: number;
  weight: number; // net multiplicity, always > 0
  parallelIndex: number; // 0 for single, 0/1 for a doubled edge
  parallelCount: number;
}

/** Vertex 1 at the top, indices ascending clockwise (screen coordinates,
 * y growing downwards). */
export function vertexPositions(count: number, radius = 1): Point[] {
  const out: Point[] = [];
  for (let i = 0; i < count; i++) {
    const angle = Math.PI / 2 - (2 * Math.PI * i) / count;
    out.push({ x: radius * Math.cos(angle), y: -radius * Math.sin(angle) });
  }
  return out;
}

/** Net arrows only: b[i][j] > 0 yields one visual edge i -> j.  Multiplicity
 * 2 is drawn as a parallel pair, anything higher as one edge with a weight
 * label (the renderer reads `weight`). */
export function arrows(q: QuiverJson): ArrowSpec[] {
  const size = totalVertices(q);
  const out: ArrowSpec[] = [];
  for (let i = 0; i < size; i++) {
    for (let j = 0; j < size; j++) {
      const w = q.b[i][j];
      if (w <= 0) continue;
      if (w === 2) {
        out.push({ from: i, to: j, weight: w, parallelIndex: 0, parallelCount: 2 });
        out.push({ from: i, to: j, weight: w, parallelIndex: 1, parallelCount: 2 });
      } else {
        out.push({ from: i, to: j, weight: w, parallelIndex: 0, parallelCount: 1 });
      }
    }
  }
  return out;
}

/** True when the drawn edge set would contain both i->j and j->i. */
export function hasTwoCycle(specs: ArrowSpec[]): boolean {
  const seen = new Set<string>();
  for (const a of specs) seen.add(`${a.from}->${a.to}`);
  for (const a of specs) {
    if (seen.has(`${a.to}->${a.from}`)) return true;
  }
  return false;
}

/** Quadratic-curve control point for an edge, offset sideways so parallel
 * edges and opposite-direction chords do not overlap. */
export function curveControl(fromPt: Point, toPt: Point, spec: ArrowSpec): Point {
  const mx = (fromPt.x + toPt.x) / 2;
  const my = (fromPt.y + toPt.y) / 2;
  const dx = toPt.x - fromPt.x;
  const dy = toPt.y - fromPt.y;
  const norm = Math.hypot(dx, dy) || 1;
  let offset = 0.12;
  if (spec.parallelCount === 2) {
    offset = spec.parallelIndex === 0 ? 0.06 : 0.22;
  }
  return { x: mx - (dy / norm) * offset, y: my + (dx / norm) * offset };
}
