/** Pure canvas geometry.
 *
 * The world-to-pixel mapping reproduces the SVG export exactly: bounding box
 * of everything drawn, 5% padding per side, uniform scale with the vertical
 * axis flipped (world y up, canvas y down), base width 640 device units.
 */
import type { Pt } from "./types.js";

export const BASE_WIDTH = 640;

export interface Box {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export interface Transform {
  /** padded world box, y still pointing up */
  viewX: number;
  viewY: number; // top of the padded box in world coordinates
  scale: number;
  widthPx: number;
  heightPx: number;
}

export interface Scene {
  curve: Pt[];
  polygon?: Pt[];
  triangleRows?: Pt[][];
  marker?: Pt;
  ghost?: Pt[];
}

export function boundingBox(groups: ReadonlyArray<ReadonlyArray<Pt>>): Box {
  let x0 = Infinity;
  let y0 = Infinity;
  let x1 = -Infinity;
  let y1 = -Infinity;
  for (const group of groups) {
    for (const [x, y] of group) {
      x0 = Math.min(x0, x);
      y0 = Math.min(y0, y);
      x1 = Math.max(x1, x);
      y1 = Math.max(y1, y);
    }
  }
  if (!Number.isFinite(x0)) {
    throw new Error("nothing to draw");
  }
  return { x0, y0, x1, y1 };
}

export function sceneGroups(scene: Scene): Pt[][] {
  const groups: Pt[][] = [scene.curve];
  if (scene.polygon) groups.push(scene.polygon);
  if (scene.triangleRows) groups.push(...scene.triangleRows);
  if (scene.marker) groups.push([scene.marker]);
  if (scene.ghost) groups.push(scene.ghost);
  return groups;
}

/** Padded uniform-scale transform; degenerate extents widen to 1 world unit. */
export function makeTransform(box: Box, basePx: number = BASE_WIDTH): Transform {
  const width = box.x1 - box.x0 || 1.0;
  const height = box.y1 - box.y0 || 1.0;
  const padX = 0.05 * width;
  const padY = 0.05 * height;
  const viewW = width + 2 * padX;
  const viewH = height + 2 * padY;
  const scale = basePx / viewW;
  return {
    viewX: box.x0 - padX,
    viewY: box.y1 + padY,
    scale,
    widthPx: basePx,
    heightPx: basePx * (viewH / viewW),
  };
}

export function toPixel(tr: Transform, pt: Pt): [number, number] {
  return [(pt[0] - tr.viewX) * tr.scale, (tr.viewY - pt[1]) * tr.scale];
}

export function fromPixel(tr: Transform, px: number, py: number): [number, number] {
  return [tr.viewX + px / tr.scale, tr.viewY - py / tr.scale];
}

/** The viewBox the SVG exporter would write for the same geometry. */
export function viewBoxOf(box: Box): [number, number, number, number] {
  const width = box.x1 - box.x0 || 1.0;
  const height = box.y1 - box.y0 || 1.0;
  const padX = 0.05 * width;
  const padY = 0.05 * height;
  return [box.x0 - padX, -(box.y1 + padY), width + 2 * padX, height + 2 * padY];
}

/** Minimal drawing surface; CanvasRenderingContext2D satisfies it. */
export interface DrawingContext {
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  setLineDash(segments: number[]): void;
  lineWidth: number;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
}

function strokePolyline(ctx: DrawingContext, tr: Transform, pts: ReadonlyArray<Pt>): void {
  if (pts.length === 0) return;
  ctx.beginPath();
  const first = pts[0]!;
  const [x0, y0] = toPixel(tr, first);
  ctx.moveTo(x0, y0);
  for (let i = 1; i < pts.length; i += 1) {
    const [x, y] = toPixel(tr, pts[i]!);
    ctx.lineTo(x, y);
  }
  ctx.stroke();
}

function fillDot(ctx: DrawingContext, tr: Transform, pt: Pt, radius: number): void {
  const [x, y] = toPixel(tr, pt);
  ctx.beginPath();
  ctx.arc(x, y, radius, 0, 2 * Math.PI);
  ctx.fill();
}

export const COLORS = {
  curve: "#1f77b4",
  polygon: "#888888",
  triangle: "#d62728",
  ghost: "#2ca02c",
};

/** Render the scene; returns the transform used (for hit-testing). */
export function drawScene(ctx: DrawingContext, scene: Scene, basePx: number = BASE_WIDTH): Transform {
  const tr = makeTransform(boundingBox(sceneGroups(scene)), basePx);
  ctx.clearRect(0, 0, tr.widthPx, tr.heightPx);

  if (scene.polygon) {
    ctx.strokeStyle = COLORS.polygon;
    ctx.lineWidth = 1.5;
    ctx.setLineDash([6, 4]);
    strokePolyline(ctx, tr, scene.polygon);
    ctx.setLineDash([]);
    ctx.fillStyle = COLORS.polygon;
    for (const pt of scene.polygon) fillDot(ctx, tr, pt, 5);
  }

  if (scene.ghost) {
    ctx.strokeStyle = COLORS.ghost;
    ctx.lineWidth = 1.5;
    ctx.setLineDash([2, 3]);
    strokePolyline(ctx, tr, scene.ghost);
    ctx.setLineDash([]);
  }

  if (scene.triangleRows) {
    ctx.strokeStyle = COLORS.triangle;
    ctx.fillStyle = COLORS.triangle;
    ctx.lineWidth = 1;
    for (const row of scene.triangleRows) {
      if (row.length > 1) strokePolyline(ctx, tr, row);
      for (const pt of row) fillDot(ctx, tr, pt, 3);
    }
  }

  ctx.strokeStyle = COLORS.curve;
  ctx.lineWidth = 2.5;
  strokePolyline(ctx, tr, scene.curve);

  if (scene.marker) {
    ctx.fillStyle = COLORS.curve;
    fillDot(ctx, tr, scene.marker, 6);
  }
  return tr;
}

/** Index of the polygon point within `radiusPx` of the pointer, or null. */
export function hitTest(
  tr: Transform,
  polygon: ReadonlyArray<Pt>,
  px: number,
  py: number,
  radiusPx = 12,
): number | null {
  let best: number | null = null;
  let bestDist = radiusPx;
  polygon.forEach((pt, i) => {
    const [x, y] = toPixel(tr, pt);
    const d = Math.hypot(x - px, y - py);
    if (d <= bestDist) {
      best = i;
      bestDist = d;
    }
  });
  return best;
}
