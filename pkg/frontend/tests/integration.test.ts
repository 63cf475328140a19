/** End-to-end tests against the real HTTP service.
 *
 * A fresh service process is spawned for the whole file; the editor-side
 * code (api client, state, render mapping) is exercised exactly the way the
 * browser uses it.
 */
import { execFileSync, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { SAMPLES, initialState, movePoint, setP, setQ } from "../src/state.js";
import { boundingBox, makeTransform, toPixel, viewBoxOf } from "../src/render.js";
import type { CurveDocument, Pt } from "../src/types.js";

const PORT = 8117 + (process.pid % 800);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
let workdir: string;
const client = new ApiClient(BASE);

function grid(count: number = SAMPLES): number[] {
  return Array.from({ length: count }, (_, i) => i / (count - 1));
}

function asPt(coords: number[]): Pt {
  return [coords[0] ?? 0, coords[1] ?? 0];
}

/** Classical Bézier reference: plain de Casteljau, coded here, no service. */
function classicalPoint(points: number[][], t: number): Pt {
  let level = points.map((pt) => [...pt]);
  while (level.length > 1) {
    const next: number[][] = [];
    for (let i = 0; i + 1 < level.length; i += 1) {
      const a = level[i]!;
      const b = level[i + 1]!;
      next.push([(1 - t) * a[0]! + t * b[0]!, (1 - t) * a[1]! + t * b[1]!]);
    }
    level = next;
  }
  return asPt(level[0]!);
}

function randomCurve(degree: number): CurveDocument {
  const points: number[][] = [];
  for (let i = 0; i <= degree; i += 1) {
    points.push([i + Math.random(), Math.random() * 4 - 2]);
  }
  return { version: 1, degree, dimension: 2, p: 1.5, q: 0.75, points };
}

beforeAll(async () => {
  workdir = mkdtempSync(join(tmpdir(), "designer-"));
  server = spawn(
    "python3",
    ["-m", "pqbezier.cli", "serve", "--port", String(PORT), "--store", join(workdir, "store")],
    { stdio: "ignore" },
  );
  const deadline = Date.now() + 30000;
  for (;;) {
    try {
      const health = await client.health();
      if (health.status === "ok") break;
    } catch {
      /* not up yet */
    }
    if (Date.now() > deadline) throw new Error("service did not come up");
    await new Promise((res) => setTimeout(res, 150));
  }
});

afterAll(() => {
  server?.kill("SIGTERM");
});

describe("drag loop", () => {
  it("median drag-to-render round trip stays under 50 ms at degree 10", async () => {
    let state = initialState(randomCurve(10));
    const ts = grid();
    // warm-up request so import/JIT costs don't pollute the measurement
    await client.evaluate(state.doc, ts);
    const latencies: number[] = [];
    for (let round = 0; round < 30; round += 1) {
      const index = round % state.doc.points.length;
      state = movePoint(state, index, [index + Math.random(), Math.random() * 4 - 2]);
      const started = performance.now();
      const response = await client.evaluate(state.doc, ts);
      const polyline = response.points.map(asPt);
      const tr = makeTransform(boundingBox([polyline]));
      toPixel(tr, polyline[0]!); // mapping is part of the render path
      latencies.push(performance.now() - started);
      expect(polyline.length).toBe(SAMPLES);
    }
    latencies.sort((a, b) => a - b);
    const median = latencies[Math.floor(latencies.length / 2)]!;
    expect(median).toBeLessThan(50);
  });

  it("endpoint interpolation is visible: the curve starts on P0", async () => {
    let state = initialState();
    state = movePoint(state, 0, [-1.25, 0.5]);
    const response = await client.evaluate(state.doc, [0, 1]);
    expect(response.points[0]![0]).toBeCloseTo(-1.25, 12);
    expect(response.points[0]![1]).toBeCloseTo(0.5, 12);
  });

  it("triangle apex marker lies on the curve at the chosen t", async () => {
    const state = initialState();
    const t = 0.37;
    const response = await client.evaluate(state.doc, [t], { triangleAt: t });
    const onCurve = response.points[0]!;
    const rows = response.triangle!.rows;
    const apex = rows[rows.length - 1]![0]!;
    // the raw apex is the curve point scaled by p^(n(n-1)/2)
    const scale = Math.pow(state.doc.p, (state.doc.degree * (state.doc.degree - 1)) / 2);
    expect(apex[0]! / scale).toBeCloseTo(onCurve[0]!, 9);
    expect(apex[1]! / scale).toBeCloseTo(onCurve[1]!, 9);
  });
});

describe("degree elevation", () => {
  it("leaves the rendered polyline within 1e-9 at all 128 samples", async () => {
    const state = initialState(randomCurve(4));
    const ts = grid();
    const before = (await client.evaluate(state.doc, ts)).points;
    const elevated = (await client.elevate(state.doc)).curve;
    expect(elevated.degree).toBe(5);
    expect(elevated.points.length).toBe(6);
    const after = (await client.evaluate(elevated, ts)).points;
    let worst = 0;
    for (let i = 0; i < ts.length; i += 1) {
      worst = Math.max(
        worst,
        Math.abs(after[i]![0]! - before[i]![0]!),
        Math.abs(after[i]![1]! - before[i]![1]!),
      );
    }
    expect(worst).toBeLessThan(1e-9);
  });
});

describe("classical limit", () => {
  it("p=q=1 editor output matches a classical reference within 1 px", async () => {
    let state = initialState(randomCurve(5));
    state = setP(state, 1);
    state = setQ(state, 1);
    expect(state.doc.p).toBe(1);
    expect(state.doc.q).toBe(1);
    const ts = grid();
    const served = (await client.evaluate(state.doc, ts)).points.map(asPt);
    const reference = ts.map((t) => classicalPoint(state.doc.points, t));
    // identical canvas transform for both polylines, as on screen
    const tr = makeTransform(boundingBox([served]));
    let worst = 0;
    for (let i = 0; i < ts.length; i += 1) {
      const [ax, ay] = toPixel(tr, served[i]!);
      const [bx, by] = toPixel(tr, reference[i]!);
      worst = Math.max(worst, Math.hypot(ax - bx, ay - by));
    }
    expect(worst).toBeLessThan(1);
  });
});

describe("subdivision ghost", () => {
  it("left piece plus right samples join at the split point", async () => {
    const state = initialState();
    const r = 0.4;
    const result = await client.subdivide(state.doc, r);
    const atSplit = (await client.evaluate(state.doc, [r])).points[0]!;
    const leftEnd = (await client.evaluate(result.left, [1])).points[0]!;
    expect(leftEnd[0]).toBeCloseTo(atSplit[0]!, 9);
    expect(leftEnd[1]).toBeCloseTo(atSplit[1]!, 9);
    const firstGhost = result.right_samples[0]!;
    expect(firstGhost[0]).toBeCloseTo(atSplit[0]!, 9);
    expect(firstGhost[1]).toBeCloseTo(atSplit[1]!, 9);
  });
});

describe("persistence", () => {
  it("save then load restores the identical document", async () => {
    const state = initialState(randomCurve(3));
    await client.save("designer-roundtrip", state.doc);
    const loaded = await client.load("designer-roundtrip");
    expect(loaded.curve).toEqual(state.doc);
  });
});

describe("export parity", () => {
  it("canvas view box equals the SVG exporter's viewBox for the same curve", async () => {
    const doc = initialState().doc;
    const curvePath = join(workdir, "parity.json");
    const svgPath = join(workdir, "parity.svg");
    writeFileSync(curvePath, JSON.stringify(doc));
    execFileSync("python3", [
      "-m",
      "pqbezier.cli",
      "plot",
      "--curve",
      curvePath,
      "--out",
      svgPath,
      "--samples",
      String(SAMPLES),
    ]);
    const svg = readFileSync(svgPath, "utf-8");
    const match = /viewBox="([^"]+)"/.exec(svg);
    expect(match).not.toBeNull();
    const exported = match![1]!.split(" ").map(Number);

    const served = (await client.evaluate(doc, grid())).points.map(asPt);
    const computed = viewBoxOf(boundingBox([served]));
    for (let i = 0; i < 4; i += 1) {
      expect(computed[i]).toBeCloseTo(exported[i]!, 12);
    }
  });
});
