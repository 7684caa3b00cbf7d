"""Hot inner loops with numba and pure-numpy implementations.

Both paths compute the identical sequence of arithmetic operations, so their
outputs are byte-equal; ``benchmarks/bench_corruptions.py`` asserts this while
timing them. Set ``TECO_NUMBA=0`` to force the numpy path; by default numba is
used whenever it imports.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit as _njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via TECO_NUMBA=0 instead
    _njit = None
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and os.environ.get("TECO_NUMBA", "1").lower() not in ("0", "false", "off")


def using_numba() -> bool:
    return USE_NUMBA and _HAVE_NUMBA


# --- glass blur: sequential local pixel swaps -------------------------------
#
# Swaps are order-dependent (later swaps see earlier results), so the loop
# cannot be vectorized; both paths build the same pixel permutation instead of
# touching image bytes.

def _glass_permutation_py(height, width, delta, iterations, offsets):
    cur = list(range(height * width))
    offs = offsets.tolist()
    idx = 0
    for _ in range(iterations):
        for h in range(height - delta, delta, -1):
            base = h * width
            for w in range(width - delta, delta, -1):
                dy, dx = offs[idx]
                idx += 1
                a = base + w
                b = (h + dy) * width + (w + dx)
                cur[a], cur[b] = cur[b], cur[a]
    return np.asarray(cur, dtype=np.int64)


if _HAVE_NUMBA:

    @_njit(cache=True)
    def _glass_permutation_nb(height, width, delta, iterations, offsets):  # pragma: no cover
        cur = np.arange(height * width, dtype=np.int64)
        idx = 0
        for _ in range(iterations):
            for h in range(height - delta, delta, -1):
                base = h * width
                for w in range(width - delta, delta, -1):
                    dy = offsets[idx, 0]
                    dx = offsets[idx, 1]
                    idx += 1
                    a = base + w
                    b = (h + dy) * width + (w + dx)
                    tmp = cur[a]
                    cur[a] = cur[b]
                    cur[b] = tmp
        return cur


def glass_permutation(height: int, width: int, delta: int, iterations: int,
                      offsets: np.ndarray) -> np.ndarray:
    """Flat pixel permutation produced by the local shuffle passes.

    ``offsets`` is an (n, 2) int64 array of (dy, dx) draws in loop order,
    one per visited pixel per iteration.
    """
    offsets = np.ascontiguousarray(offsets, dtype=np.int64)
    if using_numba():
        return _glass_permutation_nb(height, width, delta, iterations, offsets)
    return _glass_permutation_py(height, width, delta, iterations, offsets)


# --- bilinear sampling with edge clamp ---------------------------------------
#
# Shared by elastic_transform (displacement + affine warps), zoom_blur and
# snow (clipped zoom). Term order in the blend is fixed so both paths agree
# bit-for-bit.

def _bilinear_py(src, ys, xs):
    h, w = src.shape[0], src.shape[1]
    ys = np.minimum(np.maximum(ys, 0.0), h - 1.0)
    xs = np.minimum(np.maximum(xs, 0.0), w - 1.0)
    y0 = np.floor(ys).astype(np.int64)
    x0 = np.floor(xs).astype(np.int64)
    y1 = np.minimum(y0 + 1, h - 1)
    x1 = np.minimum(x0 + 1, w - 1)
    fy = (ys - y0)[..., None]
    fx = (xs - x0)[..., None]
    v00 = src[y0, x0]
    v01 = src[y0, x1]
    v10 = src[y1, x0]
    v11 = src[y1, x1]
    return (v00 * (1.0 - fy) * (1.0 - fx) + v01 * (1.0 - fy) * fx
            + v10 * fy * (1.0 - fx) + v11 * fy * fx)


if _HAVE_NUMBA:

    @_njit(cache=True)
    def _bilinear_nb(src, ys, xs):  # pragma: no cover
        h, w, c = src.shape
        oh, ow = ys.shape
        out = np.empty((oh, ow, c), dtype=np.float64)
        for i in range(oh):
            for j in range(ow):
                y = min(max(ys[i, j], 0.0), h - 1.0)
                x = min(max(xs[i, j], 0.0), w - 1.0)
                y0 = int(np.floor(y))
                x0 = int(np.floor(x))
                y1 = min(y0 + 1, h - 1)
                x1 = min(x0 + 1, w - 1)
                fy = y - y0
                fx = x - x0
                for k in range(c):
                    v00 = src[y0, x0, k]
                    v01 = src[y0, x1, k]
                    v10 = src[y1, x0, k]
                    v11 = src[y1, x1, k]
                    out[i, j, k] = (v00 * (1.0 - fy) * (1.0 - fx) + v01 * (1.0 - fy) * fx
                                    + v10 * fy * (1.0 - fx) + v11 * fy * fx)
        return out


def bilinear_sample(src: np.ndarray, ys: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Sample ``src`` (H x W x C float64) at float coords, clamped to edges."""
    src = np.ascontiguousarray(src, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    if using_numba():
        return _bilinear_nb(src, ys, xs)
    return _bilinear_py(src, ys, xs)
