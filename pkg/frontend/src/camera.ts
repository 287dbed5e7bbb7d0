// Pan/zoom camera over the lattice plane. World units are lattice cells;
// world y grows upward, screen y grows downward.

export interface Camera {
  centerX: number; // world coords at the screen center
  centerY: number;
  scale: number; // pixels per lattice cell
}

export const MIN_SCALE = 4;
export const MAX_SCALE = 120;

export function clampScale(scale: number): number {
  return Math.min(MAX_SCALE, Math.max(MIN_SCALE, scale));
}

export function makeCamera(centerX = 0, centerY = 0, scale = 28): Camera {
  return { centerX, centerY, scale: clampScale(scale) };
}

export function worldToScreen(
  cam: Camera,
  width: number,
  height: number,
  wx: number,
  wy: number,
): [number, number] {
  return [
    width / 2 + (wx - cam.centerX) * cam.scale,
    height / 2 - (wy - cam.centerY) * cam.scale,
  ];
}

export function screenToWorld(
  cam: Camera,
  width: number,
  height: number,
  sx: number,
  sy: number,
): [number, number] {
  return [
    cam.centerX + (sx - width / 2) / cam.scale,
    cam.centerY - (sy - height / 2) / cam.scale,
  ];
}

export function pan(cam: Camera, dxPixels: number, dyPixels: number): Camera {
  return {
    ...cam,
    centerX: cam.centerX - dxPixels / cam.scale,
    centerY: cam.centerY + dyPixels / cam.scale,
  };
}

// Zoom by a factor keeping the world point under (sx, sy) fixed on screen.
export function zoomAt(
  cam: Camera,
  width: number,
  height: number,
  sx: number,
  sy: number,
  factor: number,
): Camera {
  const scale = clampScale(cam.scale * factor);
  if (scale === cam.scale) return cam;
  const [wx, wy] = screenToWorld(cam, width, height, sx, sy);
  const effective = scale / cam.scale;
  return {
    centerX: wx + (cam.centerX - wx) / effective,
    centerY: wy + (cam.centerY - wy) / effective,
    scale,
  };
}

// Integer lattice range visible in the viewport, inclusive.
export function visibleRange(
  cam: Camera,
  width: number,
  height: number,
): { x0: number; x1: number; y0: number; y1: number } {
  const halfW = width / 2 / cam.scale;
  const halfH = height / 2 / cam.scale;
  return {
    x0: Math.floor(cam.centerX - halfW) - 1,
    x1: Math.ceil(cam.centerX + halfW) + 1,
    y0: Math.floor(cam.centerY - halfH) - 1,
    y1: Math.ceil(cam.centerY + halfH) + 1,
  };
}
