// Scene documents and service payloads, mirroring the published schema.

export type Point2 = [number, number];
export type Point3 = [number, number, number];

export interface CurveScene {
  kind: "curve";
  params: { p: number; q: number };
  points: number[][];
  metadata?: Record<string, unknown>;
}

export interface SurfaceScene {
  kind: "surface";
  params: { pu: number; qu: number; pv: number; qv: number };
  points: number[][][];
  metadata?: Record<string, unknown>;
}

export type SceneDocument = CurveScene | SurfaceScene;

export interface EvalResponse {
  id: unknown;
  point: number[];
  extrapolation: boolean;
  polygon_distance?: number;
  levels?: number[][][];
}

export interface SampleCurveResponse {
  id: unknown;
  points: number[][];
  polygon_distance?: number;
}

export interface SampleSurfaceResponse {
  id: unknown;
  vertices: number[][];
  faces: number[][];
  count_u: number;
  count_v: number;
}

export interface ElevateResponse {
  id: unknown;
  scene: SceneDocument;
}

export interface ServiceErrorBody {
  id: unknown;
  error: { code: string; message: string };
}

export function isCurve(scene: SceneDocument): scene is CurveScene {
  return scene.kind === "curve";
}

/** Deep-copy a scene through JSON; documents are plain data by construction. */
export function cloneScene<T extends SceneDocument>(scene: T): T {
  return JSON.parse(JSON.stringify(scene)) as T;
}
