// Canvas drawing for the editor. Every world coordinate drawn here came
// back from the service (session.render / scene control points); this file
// only maps world space onto pixels.

import type { RenderState } from "./session";
import type { Point2, SceneDocument } from "./types";
import { isCurve } from "./types";
import { fitView, projectVertex, worldToCanvas, type ViewTransform } from "./view";

export const HANDLE_RADIUS = 6;

export function viewForScene(
  scene: SceneDocument,
  render: RenderState | null,
  width: number,
  height: number,
): ViewTransform {
  const points: Point2[] = [];
  if (isCurve(scene)) {
    for (const pt of scene.points) points.push([pt[0], pt[1]]);
    if (render?.kind === "curve") {
      for (const pt of render.polyline) points.push([pt[0], pt[1]]);
    }
  } else if (render?.kind === "surface") {
    for (const vertex of render.vertices) points.push(projectVertex(vertex));
  } else {
    for (const row of scene.points) for (const vertex of row) points.push(projectVertex(vertex));
  }
  return fitView(points.length ? points : [[0, 0]], width, height);
}

function drawPolyline(
  ctx: CanvasRenderingContext2D,
  pts: number[][],
  view: ViewTransform,
  color: string,
  width: number,
  dashed = false,
): void {
  if (pts.length < 2) return;
  ctx.save();
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.setLineDash(dashed ? [6, 4] : []);
  ctx.beginPath();
  pts.forEach((pt, i) => {
    const [x, y] = worldToCanvas([pt[0], pt[1]], view);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  ctx.stroke();
  ctx.restore();
}

function drawHandle(
  ctx: CanvasRenderingContext2D,
  world: Point2,
  view: ViewTransform,
  active: boolean,
): void {
  const [x, y] = worldToCanvas(world, view);
  ctx.beginPath();
  ctx.arc(x, y, HANDLE_RADIUS, 0, Math.PI * 2);
  ctx.fillStyle = active ? "#d62728" : "#ffffff";
  ctx.strokeStyle = "#d62728";
  ctx.lineWidth = 1.5;
  ctx.fill();
  ctx.stroke();
}

export function drawScene(
  ctx: CanvasRenderingContext2D,
  scene: SceneDocument,
  render: RenderState | null,
  view: ViewTransform,
  activeHandle: number | null = null,
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  if (isCurve(scene)) {
    drawPolyline(ctx, scene.points, view, "#9aa0a6", 1, true);
    if (render?.kind === "curve") {
      if (render.tableau) {
        for (const level of render.tableau.slice(1, -1)) {
          drawPolyline(ctx, level, view, "#c5cae9", 1);
        }
        const last = render.tableau[render.tableau.length - 1][0];
        const [fx, fy] = worldToCanvas([last[0], last[1]], view);
        ctx.beginPath();
        ctx.arc(fx, fy, 5, 0, Math.PI * 2);
        ctx.fillStyle = "#2ca02c";
        ctx.fill();
      }
      drawPolyline(ctx, render.polyline, view, "#1f77b4", 2);
    }
    scene.points.forEach((pt, i) => drawHandle(ctx, [pt[0], pt[1]], view, i === activeHandle));
    return;
  }
  if (render?.kind === "surface") {
    const projected = render.vertices.map(projectVertex);
    for (let iu = 0; iu < render.countU; iu += 1) {
      const row = projected.slice(iu * render.countV, (iu + 1) * render.countV);
      drawPolyline(ctx, row, view, "#1f77b4", 1);
    }
    for (let iv = 0; iv < render.countV; iv += 1) {
      const column = [];
      for (let iu = 0; iu < render.countU; iu += 1) {
        column.push(projected[iu * render.countV + iv]);
      }
      drawPolyline(ctx, column, view, "#1f77b4", 1);
    }
  }
}

/** Index of the control handle under a canvas position, or null. */
export function hitTestHandle(
  scene: SceneDocument,
  view: ViewTransform,
  canvasPoint: Point2,
): number | null {
  if (!isCurve(scene)) return null;
  for (let i = 0; i < scene.points.length; i += 1) {
    const [x, y] = worldToCanvas([scene.points[i][0], scene.points[i][1]], view);
    const dx = x - canvasPoint[0];
    const dy = y - canvasPoint[1];
    if (dx * dx + dy * dy <= HANDLE_RADIUS * HANDLE_RADIUS * 4) return i;
  }
  return null;
}
