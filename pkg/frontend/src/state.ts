/** Editor state and its pure transition functions.
 *
 * Parameter sliders: p lives in (0, 4]; q is clamped to (0, p] unless the
 * explorer unlock is on, in which case q may exceed p (still within (0, 4]).
 */
import type { CurveDocument } from "./types.js";

export const P_MAX = 4;
export const PARAM_MIN = 0.01;
export const SAMPLES = 128;

export interface EditorState {
  doc: CurveDocument;
  selected: number | null;
  p: number;
  q: number;
  unlocked: boolean;
  showPolygon: boolean;
  showTriangle: boolean;
  triangleT: number;
  showGhost: boolean;
  ghostR: number;
  /** Samples of the discarded right piece after a subdivision, if any. */
  ghostSamples: number[][] | null;
  dirty: boolean;
  savedName: string | null;
}

function clampParam(value: number, upper: number): number {
  return Math.min(Math.max(value, PARAM_MIN), upper);
}

export function defaultDocument(): CurveDocument {
  return {
    version: 1,
    degree: 3,
    dimension: 2,
    p: 1.5,
    q: 0.75,
    points: [
      [0, 0],
      [1, 2],
      [2.5, 2.2],
      [3.5, 0.5],
    ],
  };
}

export function initialState(doc: CurveDocument = defaultDocument()): EditorState {
  return {
    doc,
    selected: null,
    p: doc.p,
    q: doc.q,
    unlocked: false,
    showPolygon: true,
    showTriangle: false,
    triangleT: 0.5,
    showGhost: false,
    ghostR: 0.5,
    ghostSamples: null,
    dirty: false,
    savedName: null,
  };
}

function withDoc(state: EditorState, doc: CurveDocument, dirty = true): EditorState {
  return { ...state, doc, dirty };
}

export function setP(state: EditorState, rawP: number): EditorState {
  const p = clampParam(rawP, P_MAX);
  const q = state.unlocked ? state.q : clampParam(state.q, p);
  return withDoc({ ...state, p, q }, { ...state.doc, p, q });
}

export function setQ(state: EditorState, rawQ: number): EditorState {
  const q = clampParam(rawQ, state.unlocked ? P_MAX : state.p);
  return withDoc({ ...state, q }, { ...state.doc, q });
}

export function setUnlocked(state: EditorState, unlocked: boolean): EditorState {
  if (unlocked) {
    return { ...state, unlocked };
  }
  // re-locking re-imposes q <= p immediately
  const q = clampParam(state.q, state.p);
  return withDoc({ ...state, unlocked, q }, { ...state.doc, q });
}

export function selectPoint(state: EditorState, index: number | null): EditorState {
  if (index !== null && (index < 0 || index >= state.doc.points.length)) {
    throw new RangeError(`point index ${index} out of range`);
  }
  return { ...state, selected: index };
}

export function movePoint(state: EditorState, index: number, xy: [number, number]): EditorState {
  if (index < 0 || index >= state.doc.points.length) {
    throw new RangeError(`point index ${index} out of range`);
  }
  const points = state.doc.points.map((pt, i) => (i === index ? [xy[0], xy[1]] : pt));
  return withDoc(state, { ...state.doc, points });
}

export function setTriangleT(state: EditorState, t: number): EditorState {
  return { ...state, triangleT: Math.min(Math.max(t, 0), 1) };
}

export function setGhostR(state: EditorState, r: number): EditorState {
  return { ...state, ghostR: Math.min(Math.max(r, 0.01), 0.99) };
}

export function togglePolygon(state: EditorState, on: boolean): EditorState {
  return { ...state, showPolygon: on };
}

export function toggleTriangle(state: EditorState, on: boolean): EditorState {
  return { ...state, showTriangle: on };
}

export function toggleGhost(state: EditorState, on: boolean): EditorState {
  return { ...state, showGhost: on };
}

/** Replace the document with its degree-elevated version (server-computed). */
export function applyElevated(state: EditorState, doc: CurveDocument): EditorState {
  return withDoc({ ...state, selected: null, p: doc.p, q: doc.q }, doc);
}

/** Keep the left piece, remember the right piece's samples as a ghost. */
export function applySubdivision(
  state: EditorState,
  left: CurveDocument,
  rightSamples: number[][],
): EditorState {
  return withDoc(
    { ...state, selected: null, ghostSamples: rightSamples, showGhost: true },
    left,
  );
}

export function markSaved(state: EditorState, name: string): EditorState {
  return { ...state, savedName: name, dirty: false };
}

export function loadDocument(state: EditorState, name: string, doc: CurveDocument): EditorState {
  return {
    ...initialState(doc),
    unlocked: state.unlocked || doc.q > doc.p,
    savedName: name,
    dirty: false,
  };
}
