import { QuiverJson, cloneQuiver } from "./types.js";

/** One mutation step: the matrix we were looking at and the vertex clicked. */
export interface HistoryEntry {
  matrix: QuiverJson;
  vertex: number;
}

export interface SessionState {
  preset: string | null;
  current: QuiverJson;
  history: HistoryEntry[];
}

export function freshSession(preset: string | null, matrix: QuiverJson): SessionState {
  return { preset, current: cloneQuiver(matrix), history: [] };
}

/** Record a mutation whose result (`mutated`) came back from the service. */
export function pushMutation(
  state: SessionState,
  vertex: number,
  mutated: QuiverJson,
): SessionState {
  return {
    preset: state.preset,
    current: cloneQuiver(mutated),
    history: [...state.history, { matrix: state.current, vertex }],
  };
}

/** Pop exactly one mutation; no-op on an empty history. */
export function undo(state: SessionState): SessionState {
  if (state.history.length === 0) return state;
  const entry = state.history[state.history.length - 1];
  return {
    preset: state.preset,
    current: entry.matrix,
    history: state.history.slice(0, -1),
  };
}

export function canUndo(state: SessionState): boolean {
  return state.history.length > 0;
}

/** The initial matrix of the session (before any mutation). */
export function initialMatrix(state: SessionState): QuiverJson {
  return state.history.length ? state.history[0].matrix : state.current;
}

/** The vertices clicked so far, oldest first. */
export function clickedVertices(state: SessionState): number[] {
  return state.history.map((entry) => entry.vertex);
}
