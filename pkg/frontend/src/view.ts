// World <-> canvas mapping and the fixed orthographic projection used for
// surface wireframes. Pure presentation; no curve geometry happens here.

import type { Point2 } from "./types";

export interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
  height: number;
}

export function worldToCanvas(point: Point2, view: ViewTransform): Point2 {
  return [
    point[0] * view.scale + view.offsetX,
    view.height - (point[1] * view.scale + view.offsetY),
  ];
}

export function canvasToWorld(point: Point2, view: ViewTransform): Point2 {
  return [
    (point[0] - view.offsetX) / view.scale,
    (view.height - point[1] - view.offsetY) / view.scale,
  ];
}

/** Fit a view so the given world points fill the canvas with a margin. */
export function fitView(
  points: Point2[],
  width: number,
  height: number,
  margin = 40,
): ViewTransform {
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const [x, y] of points) {
    minX = Math.min(minX, x);
    maxX = Math.max(maxX, x);
    minY = Math.min(minY, y);
    maxY = Math.max(maxY, y);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
  return {
    scale,
    offsetX: margin - minX * scale + (width - 2 * margin - spanX * scale) / 2,
    offsetY: margin - minY * scale + (height - 2 * margin - spanY * scale) / 2,
    height,
  };
}

const COS30 = Math.cos(Math.PI / 6);
const SIN30 = Math.sin(Math.PI / 6);

/** Isometric-style projection of a 3-D vertex for the wireframe view. */
export function projectVertex(vertex: number[]): Point2 {
  const [x, y, z] = vertex;
  return [(x - y) * COS30, z + (x + y) * SIN30];
}
