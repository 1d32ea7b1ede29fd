// Editor session: one scene, slider state, an undo stack of snapshots and
// the latest render payload. Every rendered coordinate in `render` is a
// verbatim service response; the session never computes curve geometry.

import { ServiceClient } from "./client";
import { cloneScene, isCurve, type SceneDocument } from "./types";

export interface CurveRender {
  kind: "curve";
  polyline: number[][];
  polygonDistance: number | null;
  tableau: number[][][] | null;
  probeT: number | null;
}

export interface SurfaceRender {
  kind: "surface";
  vertices: number[][];
  faces: number[][];
  countU: number;
  countV: number;
}

export type RenderState = CurveRender | SurfaceRender;

interface Snapshot {
  sceneText: string;
  render: RenderState | null;
}

export const MAX_DEGREE = 64;

export interface SessionOptions {
  sampleCount?: number;
  gridCount?: number;
}

export class EditorSession {
  scene: SceneDocument;
  render: RenderState | null = null;
  /** Non-blocking notice that q > p (guarantees degraded, still editable). */
  warning: string | null = null;
  /** Non-blocking banner shown when the service cannot be reached. */
  banner: string | null = null;

  private readonly undoStack: Snapshot[] = [];
  private readonly sequences = new Map<string, number>();
  private readonly sampleCount: number;
  private readonly gridCount: number;

  constructor(
    private readonly client: ServiceClient,
    scene: SceneDocument,
    options: SessionOptions = {},
  ) {
    this.scene = cloneScene(scene);
    this.sampleCount = options.sampleCount ?? 101;
    this.gridCount = options.gridCount ?? 17;
    this.updateWarning();
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  get canElevate(): boolean {
    const degree = isCurve(this.scene)
      ? this.scene.points.length - 1
      : Math.max(this.scene.points.length - 1, this.scene.points[0].length - 1);
    return degree < MAX_DEGREE;
  }

  get modeLabel(): string {
    if (isCurve(this.scene)) {
      const { p, q } = this.scene.params;
      if (p === 1 && q === 1) return "classical Bezier mode";
      if (p === 1) return "q-Bezier mode";
      return "two-parameter mode";
    }
    const { pu, pv, qu, qv } = this.scene.params;
    if (pu === 1 && pv === 1) {
      return qu === 1 && qv === 1 ? "classical Bezier mode" : "q-Bezier mode";
    }
    return "two-parameter mode";
  }

  get polygonDistance(): number | null {
    return this.render?.kind === "curve" ? this.render.polygonDistance : null;
  }

  private issue(cls: string): { id: string; seq: number } {
    const seq = (this.sequences.get(cls) ?? 0) + 1;
    this.sequences.set(cls, seq);
    return { id: `${cls}-${seq}`, seq };
  }

  private isCurrent(cls: string, seq: number): boolean {
    return this.sequences.get(cls) === seq;
  }

  private snapshot(): Snapshot {
    return {
      sceneText: JSON.stringify(this.scene),
      render: this.render ? (JSON.parse(JSON.stringify(this.render)) as RenderState) : null,
    };
  }

  private updateWarning(): void {
    const pairs: Array<[number, number]> = isCurve(this.scene)
      ? [[this.scene.params.p, this.scene.params.q]]
      : [
          [this.scene.params.pu, this.scene.params.qu],
          [this.scene.params.pv, this.scene.params.qv],
        ];
    this.warning = pairs.some(([p, q]) => q > p)
      ? "q > p: convex-hull and non-negativity guarantees do not apply"
      : null;
  }

  /** Fetch render data for a scene; returns null when a newer request won. */
  private async fetchRender(scene: SceneDocument): Promise<RenderState | null> {
    const { id, seq } = this.issue("render");
    if (isCurve(scene)) {
      const body = await this.client.sampleCurve(id, scene, this.sampleCount);
      if (!this.isCurrent("render", seq)) return null;
      const previous = this.render?.kind === "curve" ? this.render : null;
      return {
        kind: "curve",
        polyline: body.points,
        polygonDistance: body.polygon_distance ?? null,
        tableau: previous?.tableau ?? null,
        probeT: previous?.probeT ?? null,
      };
    }
    const body = await this.client.sampleSurface(id, scene, this.gridCount, this.gridCount);
    if (!this.isCurrent("render", seq)) return null;
    return {
      kind: "surface",
      vertices: body.vertices,
      faces: body.faces,
      countU: body.count_u,
      countV: body.count_v,
    };
  }

  /** Re-render the current scene from a fresh service call. */
  async refresh(): Promise<boolean> {
    try {
      const render = await this.fetchRender(this.scene);
      if (render === null) return false;
      this.render = render;
      this.banner = null;
      return true;
    } catch (err) {
      this.banner = `service unavailable: ${(err as Error).message}`;
      return false;
    }
  }

  /** Validate a candidate against the service, then commit it atomically. */
  private async commit(candidate: SceneDocument): Promise<boolean> {
    const previous = this.snapshot();
    try {
      const render = await this.fetchRender(candidate);
      if (render === null) return false; // superseded by a newer interaction
      this.undoStack.push(previous);
      this.scene = candidate;
      this.render = render;
      this.banner = null;
      this.updateWarning();
      return true;
    } catch (err) {
      this.banner = `service unavailable: ${(err as Error).message}`;
      return false;
    }
  }

  async dragControlPoint(index: number, position: number[]): Promise<boolean> {
    if (!isCurve(this.scene)) throw new RangeError("dragging is for curve scenes");
    if (index < 0 || index >= this.scene.points.length) {
      throw new RangeError(`control point ${index} out of range`);
    }
    if (position.length !== this.scene.points[index].length) {
      throw new RangeError("dragged position has the wrong dimension");
    }
    const candidate = cloneScene(this.scene);
    candidate.points[index] = position.slice();
    return this.commit(candidate);
  }

  async setParams(p: number, q: number, axis?: "u" | "v"): Promise<boolean> {
    if (!(p > 0) || !(q > 0)) {
      throw new RangeError("shape parameters must be positive");
    }
    const candidate = cloneScene(this.scene);
    if (isCurve(candidate)) {
      candidate.params = { p, q };
    } else if (axis === "v") {
      candidate.params = { ...candidate.params, pv: p, qv: q };
    } else {
      candidate.params = { ...candidate.params, pu: p, qu: q };
    }
    return this.commit(candidate);
  }

  async probeTableau(t: number): Promise<boolean> {
    if (!isCurve(this.scene)) throw new RangeError("tableau probing is for curve scenes");
    if (!(t >= 0 && t <= 1)) throw new RangeError("probe parameter must lie in [0, 1]");
    const { id, seq } = this.issue("probe");
    try {
      const body = await this.client.evalCurve(id, this.scene, t, true);
      if (!this.isCurrent("probe", seq)) return false;
      if (this.render?.kind === "curve") {
        this.render.tableau = body.levels ?? null;
        this.render.probeT = t;
        if (body.polygon_distance !== undefined) {
          this.render.polygonDistance = body.polygon_distance;
        }
      }
      this.banner = null;
      return true;
    } catch (err) {
      this.banner = `service unavailable: ${(err as Error).message}`;
      return false;
    }
  }

  clearProbe(): void {
    if (this.render?.kind === "curve") {
      this.render.tableau = null;
      this.render.probeT = null;
    }
  }

  async elevate(times = 1): Promise<boolean> {
    if (!this.canElevate) return false;
    const { id, seq } = this.issue("elevate");
    const previous = this.snapshot();
    try {
      const body = await this.client.elevate(id, this.scene, times);
      if (!this.isCurrent("elevate", seq)) return false;
      const render = await this.fetchRender(body.scene);
      if (render === null) return false;
      this.undoStack.push(previous);
      this.scene = body.scene;
      this.render = render;
      this.banner = null;
      this.updateWarning();
      return true;
    } catch (err) {
      this.banner = `service unavailable: ${(err as Error).message}`;
      return false;
    }
  }

  /** Restore the previous snapshot byte for byte (scene and rendered state). */
  undo(): boolean {
    const snapshot = this.undoStack.pop();
    if (!snapshot) return false;
    this.scene = JSON.parse(snapshot.sceneText) as SceneDocument;
    this.render = snapshot.render;
    this.updateWarning();
    return true;
  }

  /** Scene text in the published schema, ready for the CLI. */
  exportScene(): string {
    const out: Record<string, unknown> = {
      kind: this.scene.kind,
      params: this.scene.params,
      points: this.scene.points,
    };
    if (this.scene.metadata && Object.keys(this.scene.metadata).length > 0) {
      out.metadata = this.scene.metadata;
    }
    return `${JSON.stringify(out, null, 2)}\n`;
  }
}
