import { describe, expect, it } from "vitest";

import { arrows, hasTwoCycle, vertexPositions } from "../src/layout.js";
import { QuiverJson } from "../src/types.js";

const SOMOS4: QuiverJson = {
  n: 4,
  frozen: 0,
  b: [
    [0, -1, 2, -1],
    [1, 0, -3, 2],
    [-2, 3, 0, -1],
    [1, -2, 1, 0],
  ],
};

describe("circular layout", () => {
  it("puts vertex 1 at the top", () => {
    const pos = vertexPositions(4, 1);
    expect(pos[0].x).toBeCloseTo(0);
    expect(pos[0].y).toBeCloseTo(-1); // screen coordinates: up is negative y
  });

  it("ascends clockwise", () => {
    const pos = vertexPositions(4, 1);
    // vertex 2 sits to the right (east) for N = 4
    expect(pos[1].x).toBeCloseTo(1);
    expect(pos[1].y).toBeCloseTo(0);
    expect(pos[3].x).toBeCloseTo(-1);
  });

  it("keeps all vertices on the circle", () => {
    for (const n of [3, 5, 8]) {
      for (const p of vertexPositions(n, 2)) {
        expect(Math.hypot(p.x, p.y)).toBeCloseTo(2);
      }
    }
  });
});

describe("arrow extraction", () => {
  it("draws net arrows only and never a 2-cycle", () => {
    const specs = arrows(SOMOS4);
    expect(hasTwoCycle(specs)).toBe(false);
  });

  it("doubles multiplicity-2 edges and labels higher ones", () => {
    const specs = arrows(SOMOS4);
    const pair = specs.filter((s) => s.from === 0 && s.to === 2);
    expect(pair).toHaveLength(2); // b[1][3] = 2 drawn as a parallel pair
    const triple = specs.filter((s) => s.from === 2 && s.to === 1);
    expect(triple).toHaveLength(1);
    expect(triple[0].weight).toBe(3); // rendered as a weight label
  });

  it("ignores nonpositive entries", () => {
    const specs = arrows(SOMOS4);
    expect(specs.every((s) => SOMOS4.b[s.from][s.to] > 0)).toBe(true);
  });
});
