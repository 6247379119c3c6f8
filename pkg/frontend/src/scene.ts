/** Parser for the binary point-cloud stream (E3D-PC v1, little-endian). */

export interface ScenePoints {
  count: number;
  positions: Float32Array; // xyz interleaved
  colors: Float32Array; // rgb in [0,1]
  labels: Uint32Array | null;
}

const MAGIC = 0x50443345; // "E3DP" read as little-endian u32

export function parseScene(buffer: ArrayBuffer): ScenePoints {
  const view = new DataView(buffer);
  if (buffer.byteLength < 20 || view.getUint32(0, true) !== MAGIC) {
    throw new Error("not an E3D-PC stream");
  }
  const version = view.getUint32(4, true);
  if (version !== 1) throw new Error(`unsupported scene version ${version}`);
  const count = Number(view.getBigUint64(8, true));
  const flags = view.getUint32(16, true);
  const hasLabels = (flags & 1) !== 0;
  const expected = 20 + count * 12 + count * 3 + (hasLabels ? count * 4 : 0);
  if (buffer.byteLength !== expected) {
    throw new Error(`truncated scene stream (${buffer.byteLength} != ${expected})`);
  }

  let offset = 20;
  const positions = new Float32Array(count * 3);
  for (let i = 0; i < count * 3; i++) {
    positions[i] = view.getFloat32(offset, true);
    offset += 4;
  }
  const colors = new Float32Array(count * 3);
  const bytes = new Uint8Array(buffer, offset, count * 3);
  for (let i = 0; i < count * 3; i++) colors[i] = bytes[i] / 255;
  offset += count * 3;
  let labels: Uint32Array | null = null;
  if (hasLabels) {
    labels = new Uint32Array(count);
    for (let i = 0; i < count; i++) {
      labels[i] = view.getUint32(offset, true);
      offset += 4;
    }
  }
  return { count, positions, colors, labels };
}

export function sceneBounds(points: ScenePoints): { min: number[]; max: number[] } {
  const min = [Infinity, Infinity, Infinity];
  const max = [-Infinity, -Infinity, -Infinity];
  for (let i = 0; i < points.count; i++) {
    for (let axis = 0; axis < 3; axis++) {
      const v = points.positions[i * 3 + axis];
      if (v < min[axis]) min[axis] = v;
      if (v > max[axis]) max[axis] = v;
    }
  }
  return { min, max };
}
