/** Typed client for the curve service plus latest-wins request coalescing.
 *
 * The editor performs no curve mathematics of its own: every number it
 * displays comes back from these endpoints.
 */
import type {
  BlossomResponse,
  CurveDocument,
  ElevateResponse,
  EvaluateResponse,
  StoredCurveResponse,
  SubdivideResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`service error ${status}: ${detail}`);
  }
}

async function postJson<T>(url: string, body: unknown): Promise<T> {
  const response = await fetch(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  const payload = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, String(payload?.detail ?? "unknown"));
  }
  return payload as T;
}

export interface EvaluateOptions {
  algorithm?: string;
  sigma?: number[];
  triangleAt?: number;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  async health(): Promise<{ status: string }> {
    const response = await fetch(`${this.base}/api/health`);
    return (await response.json()) as { status: string };
  }

  evaluate(
    curve: CurveDocument,
    t: number[],
    options: EvaluateOptions = {},
  ): Promise<EvaluateResponse> {
    const body: Record<string, unknown> = { curve, t };
    if (options.algorithm !== undefined) body.algorithm = options.algorithm;
    if (options.sigma !== undefined) body.sigma = options.sigma;
    if (options.triangleAt !== undefined) body.triangle_at = options.triangleAt;
    return postJson(`${this.base}/api/evaluate`, body);
  }

  elevate(curve: CurveDocument): Promise<ElevateResponse> {
    return postJson(`${this.base}/api/elevate`, { curve });
  }

  subdivide(curve: CurveDocument, r: number): Promise<SubdivideResponse> {
    return postJson(`${this.base}/api/subdivide`, { curve, r });
  }

  blossom(curve: CurveDocument, u?: number[]): Promise<BlossomResponse> {
    const body: Record<string, unknown> = { curve };
    if (u !== undefined) body.u = u;
    return postJson(`${this.base}/api/blossom`, body);
  }

  async save(name: string, curve: CurveDocument, overwrite = true): Promise<StoredCurveResponse> {
    const response = await fetch(
      `${this.base}/api/curves/${encodeURIComponent(name)}?overwrite=${overwrite}`,
      {
        method: "PUT",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(curve),
      },
    );
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, String(payload?.detail ?? "unknown"));
    }
    return payload as StoredCurveResponse;
  }

  async load(name: string): Promise<StoredCurveResponse> {
    const response = await fetch(`${this.base}/api/curves/${encodeURIComponent(name)}`);
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, String(payload?.detail ?? "unknown"));
    }
    return payload as StoredCurveResponse;
  }
}

/**
 * Latest-wins coalescer: at most one task per key runs at a time; while one
 * is in flight only the most recent queued task is kept, older ones are
 * dropped without running.
 */
export class LatestWins {
  private readonly inFlight = new Set<string>();
  private readonly pending = new Map<string, () => Promise<void>>();

  /** Number of keys currently executing (for tests and instrumentation). */
  get activeCount(): number {
    return this.inFlight.size;
  }

  run(key: string, task: () => Promise<void>): void {
    if (this.inFlight.has(key)) {
      this.pending.set(key, task);
      return;
    }
    this.inFlight.add(key);
    void task()
      .catch(() => {
        /* a dropped frame is not an editor error */
      })
      .finally(() => {
        this.inFlight.delete(key);
        const next = this.pending.get(key);
        if (next !== undefined) {
          this.pending.delete(key);
          this.run(key, next);
        }
      });
  }
}
