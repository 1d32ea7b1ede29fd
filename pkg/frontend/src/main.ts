// Browser bootstrap: wires the canvas, sliders and buttons to the session.

import { HttpTransport, ServiceClient } from "./client";
import { drawScene, hitTestHandle, viewForScene } from "./render";
import { EditorSession } from "./session";
import { canvasToWorld } from "./view";
import type { CurveScene, Point2 } from "./types";

const DEFAULT_SCENE: CurveScene = {
  kind: "curve",
  params: { p: 1.0, q: 0.5 },
  points: [
    [0, 0],
    [1, 3],
    [3, 3],
    [4, 0],
  ],
};

const DEBOUNCE_MS = 60;

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  const canvas = element<HTMLCanvasElement>("canvas");
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("canvas 2d context unavailable");

  const params = new URLSearchParams(window.location.search);
  const base = params.get("service") ?? `http://127.0.0.1:${params.get("port") ?? "8642"}`;
  const session = new EditorSession(new ServiceClient(new HttpTransport(base)), DEFAULT_SCENE);

  const sliderP = element<HTMLInputElement>("slider-p");
  const sliderQ = element<HTMLInputElement>("slider-q");
  const sliderT = element<HTMLInputElement>("slider-t");
  const probeToggle = element<HTMLInputElement>("probe-enabled");
  const distanceOut = element<HTMLSpanElement>("distance");
  const modeOut = element<HTMLSpanElement>("mode");
  const noticeOut = element<HTMLDivElement>("notice");

  let activeHandle: number | null = null;

  const repaint = () => {
    const view = viewForScene(session.scene, session.render, canvas.width, canvas.height);
    drawScene(ctx, session.scene, session.render, view, activeHandle);
    const distance = session.polygonDistance;
    distanceOut.textContent = distance === null ? "-" : distance.toFixed(6);
    modeOut.textContent = session.modeLabel;
    noticeOut.textContent = session.banner ?? session.warning ?? "";
    noticeOut.className = session.banner ? "banner" : session.warning ? "warn" : "";
    element<HTMLButtonElement>("elevate").disabled = !session.canElevate;
    element<HTMLButtonElement>("undo").disabled = !session.canUndo;
  };

  let paramTimer: number | undefined;
  const applyParams = (final: boolean) => {
    const p = Number(sliderP.value);
    const q = Number(sliderQ.value);
    window.clearTimeout(paramTimer);
    const run = () => void session.setParams(p, q).then(repaint);
    // Debounced while sliding; the final value always triggers an exact pass.
    if (final) run();
    else paramTimer = window.setTimeout(run, DEBOUNCE_MS);
  };
  sliderP.addEventListener("input", () => applyParams(false));
  sliderQ.addEventListener("input", () => applyParams(false));
  sliderP.addEventListener("change", () => applyParams(true));
  sliderQ.addEventListener("change", () => applyParams(true));

  const applyProbe = () => {
    if (!probeToggle.checked) {
      session.clearProbe();
      repaint();
      return;
    }
    void session.probeTableau(Number(sliderT.value)).then(repaint);
  };
  sliderT.addEventListener("input", applyProbe);
  probeToggle.addEventListener("change", applyProbe);

  element<HTMLButtonElement>("elevate").addEventListener("click", () => {
    void session.elevate().then(repaint);
  });
  element<HTMLButtonElement>("undo").addEventListener("click", () => {
    session.undo();
    void session.refresh().then(repaint);
    repaint();
  });
  element<HTMLButtonElement>("export").addEventListener("click", () => {
    const blob = new Blob([session.exportScene()], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "scene.json";
    link.click();
    URL.revokeObjectURL(link.href);
  });

  const canvasPoint = (event: MouseEvent): Point2 => {
    const rect = canvas.getBoundingClientRect();
    return [event.clientX - rect.left, event.clientY - rect.top];
  };

  canvas.addEventListener("mousedown", (event) => {
    const view = viewForScene(session.scene, session.render, canvas.width, canvas.height);
    activeHandle = hitTestHandle(session.scene, view, canvasPoint(event));
    repaint();
  });
  canvas.addEventListener("mousemove", (event) => {
    if (activeHandle === null) return;
    const view = viewForScene(session.scene, session.render, canvas.width, canvas.height);
    const world = canvasToWorld(canvasPoint(event), view);
    void session.dragControlPoint(activeHandle, [world[0], world[1]]).then(repaint);
  });
  window.addEventListener("mouseup", () => {
    activeHandle = null;
    repaint();
  });

  await session.refresh();
  repaint();
}

void boot();
