/** Screen-space point picking: nearest rendered point within a pixel radius.
 *
 * Pure math over a column-major view-projection matrix so it can be tested
 * without WebGL; the viewer feeds it the camera's real matrices.
 */

export interface PickResult {
  index: number;
  position: [number, number, number];
  depth: number;
}

export function pickPoint(
  positions: Float32Array,
  viewProjection: Float32Array | number[], // column-major 4x4
  screenX: number,
  screenY: number,
  width: number,
  height: number,
  pixelRadius = 8,
): PickResult | null {
  const m = viewProjection;
  let best: PickResult | null = null;
  const count = positions.length / 3;
  for (let i = 0; i < count; i++) {
    const x = positions[i * 3];
    const y = positions[i * 3 + 1];
    const z = positions[i * 3 + 2];
    const cw = m[3] * x + m[7] * y + m[11] * z + m[15];
    if (cw <= 0) continue; // behind the camera
    const cx = (m[0] * x + m[4] * y + m[8] * z + m[12]) / cw;
    const cy = (m[1] * x + m[5] * y + m[9] * z + m[13]) / cw;
    const cz = (m[2] * x + m[6] * y + m[10] * z + m[14]) / cw;
    if (cz < -1 || cz > 1) continue; // outside the clip volume
    const sx = (cx * 0.5 + 0.5) * width;
    const sy = (1 - (cy * 0.5 + 0.5)) * height;
    const dx = sx - screenX;
    const dy = sy - screenY;
    if (dx * dx + dy * dy > pixelRadius * pixelRadius) continue;
    if (best === null || cz < best.depth) {
      best = { index: i, position: [x, y, z], depth: cz };
    }
  }
  return best;
}
