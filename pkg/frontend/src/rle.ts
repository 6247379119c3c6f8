/** Run-length encoding over point indices, as served by the mask endpoints. */

export type Rle = Array<[number, number]>;

export function decodeRle(runs: Rle, length: number): Uint8Array {
  const mask = new Uint8Array(length);
  for (const [start, run] of runs) {
    if (start < 0 || start + run > length) {
      throw new Error(`RLE run [${start}, ${run}] exceeds mask length ${length}`);
    }
    mask.fill(1, start, start + run);
  }
  return mask;
}

export function encodeRle(mask: Uint8Array): Rle {
  const runs: Rle = [];
  let start = -1;
  for (let i = 0; i <= mask.length; i++) {
    const on = i < mask.length && mask[i] !== 0;
    if (on && start < 0) start = i;
    if (!on && start >= 0) {
      runs.push([start, i - start]);
      start = -1;
    }
  }
  return runs;
}

export function countTrue(mask: Uint8Array): number {
  let n = 0;
  for (let i = 0; i < mask.length; i++) n += mask[i];
  return n;
}

export function masksEqual(a: Uint8Array, b: Uint8Array): boolean {
  if (a.length !== b.length) return false;
  for (let i = 0; i < a.length; i++) if (a[i] !== b[i]) return false;
  return true;
}
