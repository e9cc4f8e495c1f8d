/** Quiver JSON format shared with the backend: 0-indexed, row-major matrix. */
export interface QuiverJson {
  n: number;
  frozen: number;
  b: number[][];
}

export function matricesEqual(a: QuiverJson, b: QuiverJson): boolean {
  if (a.n !== b.n || a.frozen !== b.frozen) return false;
  if (a.b.length !== b.b.length) return false;
  for (let i = 0; i < a.b.length; i++) {
    if (a.b[i].length !== b.b[i].length) return false;
    for (let j = 0; j < a.b[i].length; j++) {
      if (a.b[i][j] !== b.b[i][j]) return false;
    }
  }
  return true;
}

export function cloneQuiver(q: QuiverJson): QuiverJson {
  return { n: q.n, frozen: q.frozen, b: q.b.map((row) => row.slice()) };
}

export function totalVertices(q: QuiverJson): number {
  return q.n + q.frozen;
}
