/** Browser wiring for the curve designer.
 *
 * All curve numbers come from the service; this file only routes events,
 * assembles scenes, and draws. Renders are coalesced latest-wins so a drag
 * storm keeps at most one request in flight.
 */
import { ApiClient, LatestWins } from "./api.js";
import {
  EditorState,
  SAMPLES,
  applyElevated,
  applySubdivision,
  initialState,
  loadDocument,
  markSaved,
  movePoint,
  selectPoint,
  setGhostR,
  setP,
  setQ,
  setTriangleT,
  setUnlocked,
  toggleGhost,
  togglePolygon,
  toggleTriangle,
} from "./state.js";
import { Scene, Transform, drawScene, fromPixel, hitTest } from "./render.js";
import type { Pt } from "./types.js";

const client = new ApiClient("");
const frames = new LatestWins();

let state: EditorState = initialState();
let lastTransform: Transform | null = null;

const canvas = document.getElementById("editor") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const status = document.getElementById("status")!;

function grid(): number[] {
  return Array.from({ length: SAMPLES }, (_, i) => i / (SAMPLES - 1));
}

function asPt(coords: number[]): Pt {
  return [coords[0] ?? 0, coords[1] ?? 0];
}

function setStatus(text: string): void {
  status.textContent = text;
}

function scheduleRender(): void {
  const snapshot = state;
  frames.run("render", async () => {
    try {
      const ts = grid();
      const wantTriangle = snapshot.showTriangle;
      if (wantTriangle) ts.push(snapshot.triangleT);
      const response = await client.evaluate(snapshot.doc, ts, {
        triangleAt: wantTriangle ? snapshot.triangleT : undefined,
      });
      const samples = response.points.map(asPt);
      const marker = wantTriangle ? samples.pop() : undefined;
      const scene: Scene = { curve: samples };
      if (snapshot.showPolygon) scene.polygon = snapshot.doc.points.map(asPt);
      if (wantTriangle && response.triangle) {
        scene.triangleRows = response.triangle.rows.map((row) => row.map(asPt));
        if (marker) scene.marker = marker;
      }
      if (snapshot.showGhost && snapshot.ghostSamples) {
        scene.ghost = snapshot.ghostSamples.map(asPt);
      }
      lastTransform = drawScene(ctx, scene, canvas.width);
      canvas.height = Math.round(lastTransform.heightPx);
      drawScene(ctx, scene, canvas.width);
      setStatus(
        `degree ${snapshot.doc.degree}  p=${snapshot.p.toFixed(2)} q=${snapshot.q.toFixed(2)}` +
          (snapshot.dirty ? "  (unsaved)" : snapshot.savedName ? `  saved as ${snapshot.savedName}` : ""),
      );
    } catch (err) {
      setStatus(String(err));
    }
  });
}

function update(next: EditorState): void {
  state = next;
  syncControls();
  scheduleRender();
}

function input(id: string): HTMLInputElement {
  return document.getElementById(id) as HTMLInputElement;
}

function syncControls(): void {
  input("slider-p").value = String(state.p);
  input("slider-q").value = String(state.q);
  input("slider-q").max = String(state.unlocked ? 4 : state.p);
  input("slider-t").value = String(state.triangleT);
  input("slider-r").value = String(state.ghostR);
  input("toggle-polygon").checked = state.showPolygon;
  input("toggle-triangle").checked = state.showTriangle;
  input("toggle-ghost").checked = state.showGhost;
  input("toggle-unlock").checked = state.unlocked;
  document.getElementById("readout-p")!.textContent = state.p.toFixed(2);
  document.getElementById("readout-q")!.textContent = state.q.toFixed(2);
}

canvas.addEventListener("pointerdown", (ev) => {
  if (!lastTransform || !state.showPolygon) return;
  const rect = canvas.getBoundingClientRect();
  const px = ((ev.clientX - rect.left) / rect.width) * canvas.width;
  const py = ((ev.clientY - rect.top) / rect.height) * canvas.height;
  const hit = hitTest(lastTransform, state.doc.points.map(asPt), px, py);
  update(selectPoint(state, hit));
  if (hit !== null) canvas.setPointerCapture(ev.pointerId);
});

canvas.addEventListener("pointermove", (ev) => {
  if (state.selected === null || !lastTransform) return;
  if (ev.buttons === 0) return;
  const rect = canvas.getBoundingClientRect();
  const px = ((ev.clientX - rect.left) / rect.width) * canvas.width;
  const py = ((ev.clientY - rect.top) / rect.height) * canvas.height;
  update(movePoint(state, state.selected, fromPixel(lastTransform, px, py)));
});

canvas.addEventListener("pointerup", () => {
  update(selectPoint(state, null));
});

input("slider-p").addEventListener("input", (ev) => {
  update(setP(state, Number((ev.target as HTMLInputElement).value)));
});
input("slider-q").addEventListener("input", (ev) => {
  update(setQ(state, Number((ev.target as HTMLInputElement).value)));
});
input("slider-t").addEventListener("input", (ev) => {
  update(setTriangleT(state, Number((ev.target as HTMLInputElement).value)));
});
input("slider-r").addEventListener("input", (ev) => {
  update(setGhostR(state, Number((ev.target as HTMLInputElement).value)));
});
input("toggle-polygon").addEventListener("change", (ev) => {
  update(togglePolygon(state, (ev.target as HTMLInputElement).checked));
});
input("toggle-triangle").addEventListener("change", (ev) => {
  update(toggleTriangle(state, (ev.target as HTMLInputElement).checked));
});
input("toggle-ghost").addEventListener("change", (ev) => {
  update(toggleGhost(state, (ev.target as HTMLInputElement).checked));
});
input("toggle-unlock").addEventListener("change", (ev) => {
  update(setUnlocked(state, (ev.target as HTMLInputElement).checked));
});

document.getElementById("btn-elevate")!.addEventListener("click", () => {
  void client
    .elevate(state.doc)
    .then((res) => update(applyElevated(state, res.curve)))
    .catch((err) => setStatus(String(err)));
});

document.getElementById("btn-subdivide")!.addEventListener("click", () => {
  void client
    .subdivide(state.doc, state.ghostR)
    .then((res) => update(applySubdivision(state, res.left, res.right_samples)))
    .catch((err) => setStatus(String(err)));
});

document.getElementById("btn-save")!.addEventListener("click", () => {
  const name = input("curve-name").value.trim();
  if (!name) {
    setStatus("enter a curve name first");
    return;
  }
  void client
    .save(name, state.doc)
    .then(() => update(markSaved(state, name)))
    .catch((err) => setStatus(String(err)));
});

document.getElementById("btn-load")!.addEventListener("click", () => {
  const name = input("curve-name").value.trim();
  if (!name) {
    setStatus("enter a curve name first");
    return;
  }
  void client
    .load(name)
    .then((res) => update(loadDocument(state, name, res.curve)))
    .catch((err) => setStatus(String(err)));
});

syncControls();
scheduleRender();
