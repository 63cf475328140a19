import { describe, expect, it } from "vitest";

import {
  BASE_WIDTH,
  boundingBox,
  drawScene,
  fromPixel,
  hitTest,
  makeTransform,
  sceneGroups,
  toPixel,
  viewBoxOf,
  type DrawingContext,
  type Scene,
} from "../src/render.js";
import type { Pt } from "../src/types.js";

describe("bounding box", () => {
  it("covers every group", () => {
    const box = boundingBox([
      [
        [0, 0],
        [3, 1],
      ],
      [[1, 2]],
    ]);
    expect(box).toEqual({ x0: 0, y0: 0, x1: 3, y1: 2 });
  });

  it("rejects empty scenes", () => {
    expect(() => boundingBox([])).toThrow();
  });
});

describe("view box parity with the SVG exporter", () => {
  // literals frozen from the SVG renderer's output for the same inputs;
  // both sides use IEEE doubles with the identical operation order, so the
  // numbers must agree bit for bit
  it("plain box", () => {
    const vb = viewBoxOf({ x0: 0, y0: 0, x1: 3, y1: 2 });
    expect(vb).toEqual([-0.15000000000000002, -2.1, 3.3, 2.2]);
  });

  it("degenerate box widens to one world unit", () => {
    const vb = viewBoxOf({ x0: 2, y0: 2, x1: 2, y1: 2 });
    expect(vb).toEqual([1.95, -2.05, 1.1, 1.1]);
  });

  it("mixed-sign box", () => {
    const vb = viewBoxOf({ x0: -1.5, y0: -0.7, x1: 2.34, y1: 3.25 });
    expect(vb).toEqual([-1.692, -3.4475, 4.224, 4.345000000000001]);
  });
});

describe("world to pixel mapping", () => {
  const tr = makeTransform({ x0: 0, y0: 0, x1: 3, y1: 2 });

  it("is uniform and y-flipped", () => {
    const [xa, ya] = toPixel(tr, [0, 0]);
    const [xb, yb] = toPixel(tr, [3, 2]);
    expect(xb).toBeGreaterThan(xa);
    expect(yb).toBeLessThan(ya); // larger world y is higher on screen
    // uniform scale: equal world steps map to equal pixel steps on both axes
    const [x1] = toPixel(tr, [1, 0]);
    const [, y1] = toPixel(tr, [0, 1]);
    expect(Math.abs(x1 - xa)).toBeCloseTo(Math.abs(y1 - ya), 10);
  });

  it("fills the base width", () => {
    expect(tr.widthPx).toBe(BASE_WIDTH);
    const [left] = toPixel(tr, [tr.viewX, 0]);
    expect(left).toBe(0);
    const vb = viewBoxOf({ x0: 0, y0: 0, x1: 3, y1: 2 });
    const [right] = toPixel(tr, [tr.viewX + vb[2], 0]);
    expect(right).toBeCloseTo(BASE_WIDTH, 9);
    expect(tr.heightPx).toBeCloseTo((BASE_WIDTH * vb[3]) / vb[2], 9);
  });

  it("round-trips through fromPixel", () => {
    for (const pt of [
      [0.3, 1.7],
      [-2, 5],
      [3, 0],
    ] as Pt[]) {
      const [px, py] = toPixel(tr, pt);
      const [wx, wy] = fromPixel(tr, px, py);
      expect(wx).toBeCloseTo(pt[0], 12);
      expect(wy).toBeCloseTo(pt[1], 12);
    }
  });
});

class RecordingContext implements DrawingContext {
  ops: string[] = [];
  lineWidth = 1;
  strokeStyle: string | CanvasGradient | CanvasPattern = "";
  fillStyle: string | CanvasGradient | CanvasPattern = "";
  clearRect(): void {
    this.ops.push("clear");
  }
  beginPath(): void {
    this.ops.push("begin");
  }
  moveTo(x: number, y: number): void {
    this.ops.push(`move ${x.toFixed(2)},${y.toFixed(2)}`);
  }
  lineTo(): void {
    this.ops.push("line");
  }
  arc(): void {
    this.ops.push("arc");
  }
  stroke(): void {
    this.ops.push(`stroke ${String(this.strokeStyle)}`);
  }
  fill(): void {
    this.ops.push(`fill ${String(this.fillStyle)}`);
  }
  setLineDash(segments: number[]): void {
    this.ops.push(`dash ${segments.join(",")}`);
  }
}

describe("scene drawing", () => {
  const scene: Scene = {
    curve: [
      [0, 0],
      [1, 1],
      [2, 0.5],
    ],
    polygon: [
      [0, 0],
      [1, 2],
      [2, 0.5],
    ],
    triangleRows: [
      [
        [0, 0],
        [1, 2],
      ],
      [[0.5, 1]],
    ],
    marker: [1, 1],
    ghost: [
      [2, 0.5],
      [3, 0],
    ],
  };

  it("draws every layer with its own color", () => {
    const ctx = new RecordingContext();
    drawScene(ctx, scene);
    const text = ctx.ops.join("\n");
    expect(text).toContain("stroke #1f77b4");
    expect(text).toContain("stroke #888888");
    expect(text).toContain("stroke #d62728");
    expect(text).toContain("stroke #2ca02c");
    expect(text).toContain("fill #1f77b4");
    expect(ctx.ops[0]).toBe("clear");
  });

  it("scene groups include overlays in the fitted box", () => {
    const groups = sceneGroups(scene);
    const box = boundingBox(groups);
    expect(box.x1).toBe(3); // ghost extends the box
    expect(box.y1).toBe(2); // polygon extends the box
  });

  it("returns the transform used for hit-testing", () => {
    const ctx = new RecordingContext();
    const tr = drawScene(ctx, scene);
    const polygon = scene.polygon!;
    const target = polygon[1]!;
    const [px, py] = toPixel(tr, target);
    expect(hitTest(tr, polygon, px + 3, py - 3)).toBe(1);
    expect(hitTest(tr, polygon, px + 300, py)).toBeNull();
  });

  it("hit-test prefers the nearest point", () => {
    const ctx = new RecordingContext();
    const tr = drawScene(ctx, scene);
    const polygon: Pt[] = [
      [0, 0],
      [0.05, 0.05],
    ];
    const [px, py] = toPixel(tr, [0.05, 0.05]);
    expect(hitTest(tr, polygon, px, py)).toBe(1);
  });
});
