/** Wire types shared with the HTTP service (float mode only). */

export interface CurveDocument {
  version: 1;
  degree: number;
  dimension: 1 | 2 | 3;
  p: number;
  q: number;
  points: number[][];
}

export interface EvaluateResponse {
  points: number[][];
  triangle?: {
    algorithm: string;
    t: number;
    rows: number[][][];
  };
}

export interface ElevateResponse {
  curve: CurveDocument;
}

export interface SubdivideResponse {
  left: CurveDocument;
  right_samples: number[][];
}

export interface BlossomResponse {
  value?: number[];
  control_points?: number[][];
}

export interface StoredCurveResponse {
  name: string;
  curve: CurveDocument;
}

export type Pt = readonly [number, number];
