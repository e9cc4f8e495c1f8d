import { describe, expect, it } from "vitest";

import {
  canUndo,
  clickedVertices,
  freshSession,
  initialMatrix,
  pushMutation,
  undo,
} from "../src/state.js";
import { QuiverJson, matricesEqual } from "../src/types.js";

const A: QuiverJson = {
  n: 2,
  frozen: 0,
  b: [
    [0, 1],
    [-1, 0],
  ],
};
const B: QuiverJson = {
  n: 2,
  frozen: 0,
  b: [
    [0, -1],
    [1, 0],
  ],
};

describe("session state", () => {
  it("starts with an empty history", () => {
    const s = freshSession("somos4", A);
    expect(canUndo(s)).toBe(false);
    expect(clickedVertices(s)).toEqual([]);
    expect(matricesEqual(initialMatrix(s), A)).toBe(true);
  });

  it("records mutations and undoes exactly one", () => {
    let s = freshSession(null, A);
    s = pushMutation(s, 1, B);
    s = pushMutation(s, 2, A);
    expect(clickedVertices(s)).toEqual([1, 2]);
    expect(matricesEqual(s.current, A)).toBe(true);

    s = undo(s);
    expect(matricesEqual(s.current, B)).toBe(true);
    expect(clickedVertices(s)).toEqual([1]);

    s = undo(s);
    expect(matricesEqual(s.current, A)).toBe(true);
    expect(canUndo(s)).toBe(false);
  });

  it("undo on an empty history is a no-op", () => {
    const s = freshSession(null, A);
    expect(undo(s)).toBe(s);
  });

  it("keeps the initial matrix reachable through any history depth", () => {
    let s = freshSession(null, A);
    s = pushMutation(s, 1, B);
    s = pushMutation(s, 1, A);
    s = pushMutation(s, 2, B);
    expect(matricesEqual(initialMatrix(s), A)).toBe(true);
  });

  it("does not alias the stored matrices", () => {
    const source: QuiverJson = { n: 2, frozen: 0, b: [[0, 3], [-3, 0]] };
    const s = freshSession(null, source);
    source.b[0][1] = 99;
    expect(s.current.b[0][1]).toBe(3);
  });
});
