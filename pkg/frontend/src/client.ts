// Thin client for the evaluation service. The editor never computes
// geometry itself; everything it draws comes back through this boundary.

import type {
  ElevateResponse,
  EvalResponse,
  SampleCurveResponse,
  SampleSurfaceResponse,
  SceneDocument,
  ServiceErrorBody,
} from "./types";

export interface Transport {
  get(path: string): Promise<unknown>;
  post(path: string, body: unknown): Promise<unknown>;
}

export class ServiceRequestError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export class HttpTransport implements Transport {
  constructor(private readonly baseUrl: string) {}

  private async decode(response: Response): Promise<unknown> {
    const body = (await response.json()) as unknown;
    if (!response.ok) {
      const err = body as ServiceErrorBody;
      throw new ServiceRequestError(
        err.error?.code ?? "unknown",
        err.error?.message ?? response.statusText,
        response.status,
      );
    }
    return body;
  }

  async get(path: string): Promise<unknown> {
    return this.decode(await fetch(`${this.baseUrl}${path}`));
  }

  async post(path: string, body: unknown): Promise<unknown> {
    return this.decode(
      await fetch(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }
}

export class ServiceClient {
  constructor(private readonly transport: Transport) {}

  async health(): Promise<boolean> {
    const body = (await this.transport.get("/health")) as { ok?: boolean };
    return body.ok === true;
  }

  async evalCurve(
    id: string,
    scene: SceneDocument,
    t: number,
    tableau = false,
  ): Promise<EvalResponse> {
    return (await this.transport.post("/eval", { id, scene, t, tableau })) as EvalResponse;
  }

  async evalSurface(id: string, scene: SceneDocument, u: number, v: number): Promise<EvalResponse> {
    return (await this.transport.post("/eval", { id, scene, u, v })) as EvalResponse;
  }

  async sampleCurve(id: string, scene: SceneDocument, count: number): Promise<SampleCurveResponse> {
    return (await this.transport.post("/sample", { id, scene, count })) as SampleCurveResponse;
  }

  async sampleSurface(
    id: string,
    scene: SceneDocument,
    countU: number,
    countV: number,
  ): Promise<SampleSurfaceResponse> {
    return (await this.transport.post("/sample", {
      id,
      scene,
      count_u: countU,
      count_v: countV,
    })) as SampleSurfaceResponse;
  }

  async elevate(id: string, scene: SceneDocument, times = 1): Promise<ElevateResponse> {
    return (await this.transport.post("/elevate", { id, scene, times })) as ElevateResponse;
  }
}
