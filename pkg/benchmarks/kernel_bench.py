"""Benchmark the numba kernels against their pure-numpy fallbacks.

Covers the three hot paths: per-candidate min distance (click
placement), 26-connected component labeling (error regions) and sorted
key lookup (sparse conv pair building). Run directly or via
``clickseg bench``.
"""

import time

import numpy as np

from clickseg.kernels import accel, reference
from clickseg.kernels.reference import pack_coords

_OFFSETS = np.array(
    [(dx, dy, dz) for dx in (-1, 0, 1) for dy in (-1, 0, 1) for dz in (-1, 0, 1) if (dx, dy, dz) != (0, 0, 0)],
    dtype=np.int64,
)


def _timeit(fn, repeats):
    fn()  # warm-up (includes JIT compile for the numba backend)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases(rng):
    cands = rng.uniform(0, 2, size=(1500, 3))
    refs = rng.uniform(0, 2, size=(2500, 3))

    coords = np.unique(rng.integers(0, 28, size=(4000, 3)), axis=0)
    keys = np.sort(pack_coords(coords))
    queries = pack_coords(coords + rng.integers(-1, 2, size=coords.shape))

    blob = np.unique(rng.integers(0, 22, size=(2500, 3)), axis=0)
    return [
        ("min_sqdist_to_refs", lambda b: b.min_sqdist_to_refs(cands, refs)),
        ("lookup_keys", lambda b: b.lookup_keys(keys, queries)),
        ("connected_components", lambda b: b.connected_components(blob, _OFFSETS)),
    ]


def main(repeats: int = 5) -> None:
    rng = np.random.default_rng(0)
    print(f"{'kernel':<24}{'numpy':>12}{'numba':>12}{'speedup':>10}")
    for name, call in _cases(rng):
        t_np = _timeit(lambda: call(reference), repeats)
        t_nb = _timeit(lambda: call(accel), repeats)
        print(f"{name:<24}{t_np * 1e3:>10.2f}ms{t_nb * 1e3:>10.2f}ms{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
