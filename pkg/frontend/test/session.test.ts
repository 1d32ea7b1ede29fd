import { beforeEach, describe, expect, it } from "vitest";

import { ServiceClient } from "../src/client";
import { EditorSession } from "../src/session";
import type { CurveScene, SampleCurveResponse } from "../src/types";
import { FakeTransport } from "./fake";

const SCENE: CurveScene = {
  kind: "curve",
  params: { p: 1.0, q: 0.5 },
  points: [
    [0, 0],
    [1, 3],
    [3, 3],
    [4, 0],
  ],
};

let transport: FakeTransport;
let session: EditorSession;

beforeEach(() => {
  transport = new FakeTransport();
  session = new EditorSession(new ServiceClient(transport), SCENE);
});

describe("refresh", () => {
  it("adopts the service payload verbatim", async () => {
    expect(await session.refresh()).toBe(true);
    const sent = transport.lastResponse as SampleCurveResponse;
    expect(session.render?.kind).toBe("curve");
    if (session.render?.kind === "curve") {
      expect(session.render.polyline).toEqual(sent.points);
      expect(session.render.polygonDistance).toBe(sent.polygon_distance);
    }
  });

  it("reports a banner when the service is unreachable", async () => {
    transport.failWith = new Error("connection refused");
    expect(await session.refresh()).toBe(false);
    expect(session.banner).toContain("connection refused");
    expect(session.render).toBeNull();
  });
});

describe("dragControlPoint", () => {
  it("moves the point and re-renders from the service", async () => {
    await session.refresh();
    expect(await session.dragControlPoint(0, [-1, 2])).toBe(true);
    expect(session.scene.points[0]).toEqual([-1, 2]);
    const sent = transport.lastResponse as SampleCurveResponse;
    if (session.render?.kind === "curve") {
      expect(session.render.polyline).toEqual(sent.points);
    }
    expect(session.canUndo).toBe(true);
  });

  it("rejects an out-of-range index", async () => {
    await expect(session.dragControlPoint(9, [0, 0])).rejects.toThrow(RangeError);
  });

  it("leaves the scene unchanged when the service fails", async () => {
    await session.refresh();
    const before = JSON.stringify(session.scene);
    transport.failWith = new Error("boom");
    expect(await session.dragControlPoint(0, [5, 5])).toBe(false);
    expect(JSON.stringify(session.scene)).toBe(before);
    expect(session.banner).toContain("boom");
    expect(session.canUndo).toBe(false);
  });

  it("undo restores scene and rendered polyline byte-equal", async () => {
    await session.refresh();
    const sceneBefore = JSON.stringify(session.scene);
    const renderBefore = JSON.stringify(session.render);
    await session.dragControlPoint(1, [2, 7]);
    expect(JSON.stringify(session.scene)).not.toBe(sceneBefore);
    expect(session.undo()).toBe(true);
    expect(JSON.stringify(session.scene)).toBe(sceneBefore);
    expect(JSON.stringify(session.render)).toBe(renderBefore);
    expect(session.undo()).toBe(false);
  });
});

describe("setParams", () => {
  it("rejects non-positive values at the boundary", async () => {
    await expect(session.setParams(0, 0.5)).rejects.toThrow(RangeError);
    await expect(session.setParams(1, -1)).rejects.toThrow(RangeError);
  });

  it("warns without blocking when q > p", async () => {
    expect(await session.setParams(0.5, 0.9)).toBe(true);
    expect(session.warning).toContain("q > p");
    expect((session.scene as CurveScene).params).toEqual({ p: 0.5, q: 0.9 });
  });

  it("labels the reduced modes", async () => {
    expect(session.modeLabel).toBe("q-Bezier mode");
    await session.setParams(1, 1);
    expect(session.modeLabel).toBe("classical Bezier mode");
    await session.setParams(0.8, 0.5);
    expect(session.modeLabel).toBe("two-parameter mode");
  });

  it("updates the distance readout from the service", async () => {
    await session.setParams(1, 0.9);
    const sent = transport.lastResponse as SampleCurveResponse;
    expect(session.polygonDistance).toBe(sent.polygon_distance);
  });
});

describe("probeTableau", () => {
  it("stores the levels exactly as returned", async () => {
    await session.refresh();
    expect(await session.probeTableau(0.5)).toBe(true);
    const sent = transport.lastResponse as { levels: number[][][] };
    if (session.render?.kind === "curve") {
      expect(session.render.tableau).toEqual(sent.levels);
      expect(session.render.probeT).toBe(0.5);
    }
    session.clearProbe();
    if (session.render?.kind === "curve") {
      expect(session.render.tableau).toBeNull();
    }
  });

  it("rejects parameters outside [0, 1]", async () => {
    await expect(session.probeTableau(1.5)).rejects.toThrow(RangeError);
  });
});

describe("elevate", () => {
  it("replaces the scene with the service's elevated scene", async () => {
    await session.refresh();
    const degreeBefore = session.scene.points.length - 1;
    expect(await session.elevate()).toBe(true);
    expect(session.scene.points.length - 1).toBe(degreeBefore + 1);
    expect(session.canUndo).toBe(true);
    session.undo();
    expect(session.scene.points.length - 1).toBe(degreeBefore);
  });

  it("is disabled at the degree cap", async () => {
    const big: CurveScene = {
      kind: "curve",
      params: { p: 1, q: 0.5 },
      points: Array.from({ length: 65 }, (_, i) => [i, 0]),
    };
    const capped = new EditorSession(new ServiceClient(transport), big);
    expect(capped.canElevate).toBe(false);
    expect(await capped.elevate()).toBe(false);
    expect(transport.calls.length).toBe(0);
  });
});

describe("stale responses", () => {
  it("discards an older render when a newer one is already in flight", async () => {
    transport.manual = true;
    const first = session.dragControlPoint(0, [10, 10]);
    const second = session.dragControlPoint(0, [20, 20]);
    expect(transport.pending.length).toBe(2);
    transport.release(1); // newer request answers first
    expect(await second).toBe(true);
    expect(session.scene.points[0]).toEqual([20, 20]);
    const rendered = JSON.stringify(session.render);
    transport.release(0); // stale answer arrives late
    expect(await first).toBe(false);
    expect(session.scene.points[0]).toEqual([20, 20]);
    expect(JSON.stringify(session.render)).toBe(rendered);
  });
});

describe("export", () => {
  it("produces schema-shaped JSON of the current scene", async () => {
    await session.dragControlPoint(3, [5, 1]);
    const parsed = JSON.parse(session.exportScene());
    expect(parsed.kind).toBe("curve");
    expect(parsed.params).toEqual({ p: 1.0, q: 0.5 });
    expect(parsed.points[3]).toEqual([5, 1]);
    expect(parsed).not.toHaveProperty("metadata");
  });
});
