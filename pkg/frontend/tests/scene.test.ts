import { describe, expect, it } from "vitest";
import { parseScene, sceneBounds } from "../src/scene";

/** Build an E3D-PC v1 buffer the same way the backend packs it. */
function buildScene(
  positions: number[][],
  colors: number[][],
  labels: number[] | null,
): ArrayBuffer {
  const n = positions.length;
  const size = 20 + n * 12 + n * 3 + (labels ? n * 4 : 0);
  const buffer = new ArrayBuffer(size);
  const view = new DataView(buffer);
  view.setUint32(0, 0x50443345, true); // "E3DP"
  view.setUint32(4, 1, true);
  view.setBigUint64(8, BigInt(n), true);
  view.setUint32(16, labels ? 1 : 0, true);
  let off = 20;
  for (const p of positions) for (const v of p) { view.setFloat32(off, v, true); off += 4; }
  for (const c of colors) for (const v of c) { view.setUint8(off, Math.round(v * 255)); off += 1; }
  if (labels) for (const l of labels) { view.setUint32(off, l, true); off += 4; }
  return buffer;
}

describe("scene parser", () => {
  it("parses positions, colors and labels", () => {
    const buffer = buildScene(
      [[0.5, 1.25, -2.0], [3.0, 0.0, 1.5]],
      [[1, 0, 0], [0, 0.5019607843137255, 1]],
      [0, 7],
    );
    const points = parseScene(buffer);
    expect(points.count).toBe(2);
    expect(points.positions[1]).toBeCloseTo(1.25, 6);
    expect(points.colors[0]).toBe(1);
    expect(points.colors[4]).toBeCloseTo(0.5019, 3);
    expect(Array.from(points.labels!)).toEqual([0, 7]);
  });

  it("parses label-less scenes", () => {
    const points = parseScene(buildScene([[0, 0, 0]], [[0.2, 0.2, 0.2]], null));
    expect(points.labels).toBeNull();
  });

  it("rejects bad magic and truncation", () => {
    const good = buildScene([[0, 0, 0]], [[0, 0, 0]], null);
    const bad = good.slice(0);
    new DataView(bad).setUint32(0, 0xdeadbeef, true);
    expect(() => parseScene(bad)).toThrow(/not an E3D-PC/);
    expect(() => parseScene(good.slice(0, good.byteLength - 2))).toThrow(/truncated/);
  });

  it("computes bounds", () => {
    const points = parseScene(buildScene([[0, -1, 2], [3, 4, -5]], [[0, 0, 0], [0, 0, 0]], null));
    const { min, max } = sceneBounds(points);
    expect(min).toEqual([0, -1, -5]);
    expect(max).toEqual([3, 4, 2]);
  });
});
