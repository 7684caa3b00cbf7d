"""The fifteen corruption operators.

Every operator maps an H x W x 3 uint8 buffer to a same-shape result, doing
its math on [0, 1] floats; results are clamped and quantized by round-half-up
back to bytes (the dispatcher in ``bank`` handles the final quantization for
operators that return floats). Stochastic operators draw only from the passed
``numpy.random.Generator``, so output is a pure function of (pixels, params,
seed).
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from PIL import Image

from ..image import ImageTensor, decode_image, encode_image, to_pil
from .kernels import bilinear_sample, glass_permutation
from .params import GLASS_BLUR_MAX_ITERATIONS


def to_unit(x: np.ndarray) -> np.ndarray:
    return x.astype(np.float64) / 255.0


def quantize(x: np.ndarray) -> np.ndarray:
    """Clamp to [0, 1] and quantize round-half-up to bytes."""
    return np.floor(np.clip(x, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)


def _gaussian_channelwise(x: np.ndarray, sigma: float) -> np.ndarray:
    if sigma <= 0:
        return x
    return ndimage.gaussian_filter(x, sigma=(sigma, sigma, 0), mode="nearest")


def _gaussian_kernel_1d(size: int, sigma: float) -> np.ndarray:
    i = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    w = np.exp(-(i * i) / (2.0 * sigma * sigma))
    return w / w.sum()


def _correlate_channelwise(x: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    for c in range(x.shape[2]):
        out[:, :, c] = ndimage.correlate(x[:, :, c], kernel, mode="mirror")
    return out


def _disk_kernel(radius: float, alias_blur: float) -> np.ndarray:
    if radius <= 8:
        coords = np.arange(-8, 9, dtype=np.float64)
        blur_size = 3
    else:
        coords = np.arange(-radius, radius + 1, dtype=np.float64)
        blur_size = 5
    xx, yy = np.meshgrid(coords, coords)
    disk = ((xx * xx + yy * yy) <= radius * radius).astype(np.float64)
    disk /= disk.sum()
    g = _gaussian_kernel_1d(blur_size, alias_blur)
    disk = ndimage.correlate1d(disk, g, axis=0, mode="mirror")
    disk = ndimage.correlate1d(disk, g, axis=1, mode="mirror")
    return disk


def _line_kernel(radius: int, sigma: float, angle_deg: float) -> np.ndarray:
    size = 2 * int(radius) + 1
    kernel = np.zeros((size, size), dtype=np.float64)
    kernel[:, size // 2] = _gaussian_kernel_1d(size, sigma)
    kernel = ndimage.rotate(kernel, angle_deg, reshape=True, order=1, mode="constant", cval=0.0)
    return kernel / kernel.sum()


def _clipped_zoom(x: np.ndarray, factor: float) -> np.ndarray:
    h, w = x.shape[0], x.shape[1]
    ch = int(np.ceil(h / factor))
    cw = int(np.ceil(w / factor))
    top = (h - ch) // 2
    left = (w - cw) // 2
    crop = x[top:top + ch, left:left + cw]
    ys = (np.arange(h, dtype=np.float64) + 0.5) * (ch / h) - 0.5
    xs = (np.arange(w, dtype=np.float64) + 0.5) * (cw / w) - 0.5
    grid_y, grid_x = np.meshgrid(ys, xs, indexing="ij")
    return bilinear_sample(crop, grid_y, grid_x)


def _plasma_fractal(mapsize: int, wibbledecay: float, rng: np.random.Generator) -> np.ndarray:
    """Diamond-square heightmap on a power-of-two grid, normalized to [0, 1]."""
    assert mapsize & (mapsize - 1) == 0
    maparray = np.empty((mapsize, mapsize), dtype=np.float64)
    maparray[0, 0] = 0.0
    stepsize = mapsize
    wibble = 100.0

    def wibbledmean(array):
        return array / 4.0 + wibble * rng.uniform(-wibble, wibble, array.shape)

    def fillsquares():
        cornerref = maparray[0:mapsize:stepsize, 0:mapsize:stepsize]
        squareaccum = cornerref + np.roll(cornerref, -1, axis=0)
        squareaccum += np.roll(squareaccum, -1, axis=1)
        maparray[stepsize // 2:mapsize:stepsize,
                 stepsize // 2:mapsize:stepsize] = wibbledmean(squareaccum)

    def filldiamonds():
        drgrid = maparray[stepsize // 2:mapsize:stepsize, stepsize // 2:mapsize:stepsize]
        ulgrid = maparray[0:mapsize:stepsize, 0:mapsize:stepsize]
        ldrsum = drgrid + np.roll(drgrid, 1, axis=0)
        lulsum = ulgrid + np.roll(ulgrid, -1, axis=1)
        maparray[0:mapsize:stepsize, stepsize // 2:mapsize:stepsize] = wibbledmean(ldrsum + lulsum)
        tdrsum = drgrid + np.roll(drgrid, 1, axis=1)
        tulsum = ulgrid + np.roll(ulgrid, -1, axis=0)
        maparray[stepsize // 2:mapsize:stepsize, 0:mapsize:stepsize] = wibbledmean(tdrsum + tulsum)

    while stepsize >= 2:
        fillsquares()
        filldiamonds()
        stepsize //= 2
        wibble /= wibbledecay

    maparray -= maparray.min()
    return maparray / maparray.max()


def _rec601_gray(x: np.ndarray) -> np.ndarray:
    return 0.299 * x[:, :, 0] + 0.587 * x[:, :, 1] + 0.114 * x[:, :, 2]


# --- G1: noise ----------------------------------------------------------------

def gaussian_noise(x: np.ndarray, rng: np.random.Generator, std: float) -> np.ndarray:
    return to_unit(x) + rng.normal(0.0, std, x.shape)


def shot_noise(x: np.ndarray, rng: np.random.Generator, rate: float) -> np.ndarray:
    return rng.poisson(to_unit(x) * rate) / float(rate)


def impulse_noise(x: np.ndarray, rng: np.random.Generator, amount: float) -> np.ndarray:
    out = to_unit(x)
    flipped = rng.random(out.shape) < amount
    salted = rng.random(out.shape) < 0.5
    out[flipped & salted] = 1.0
    out[flipped & ~salted] = 0.0
    return out


# --- G2: blur -------------------------------------------------------------------

def defocus_blur(x: np.ndarray, radius: float, alias_blur: float) -> np.ndarray:
    return _correlate_channelwise(to_unit(x), _disk_kernel(radius, alias_blur))


def glass_blur(x: np.ndarray, rng: np.random.Generator, sigma: float,
               max_delta: int, iterations: int) -> np.ndarray:
    iterations = min(int(iterations), GLASS_BLUR_MAX_ITERATIONS)
    h, w = x.shape[0], x.shape[1]
    d = int(max_delta)
    out = quantize(_gaussian_channelwise(to_unit(x), sigma))
    n_h = max(0, h - 2 * d)
    n_w = max(0, w - 2 * d)
    if iterations > 0 and n_h > 0 and n_w > 0:
        offsets = rng.integers(-d, d, size=(iterations * n_h * n_w, 2), dtype=np.int64)
        perm = glass_permutation(h, w, d, iterations, offsets)
        out = out.reshape(-1, 3)[perm].reshape(h, w, 3)
    return _gaussian_channelwise(to_unit(out), sigma)


def motion_blur(x: np.ndarray, rng: np.random.Generator, radius: int, sigma: float) -> np.ndarray:
    angle = rng.uniform(-45.0, 45.0)
    return _correlate_channelwise(to_unit(x), _line_kernel(radius, sigma, angle))


def zoom_blur(x: np.ndarray, stop: float, step: float) -> np.ndarray:
    factors = np.arange(1.0, stop, step)
    base = to_unit(x)
    acc = np.zeros_like(base)
    for factor in factors:
        acc += _clipped_zoom(base, factor)
    return (base + acc) / (len(factors) + 1.0)


# --- G3: nature ------------------------------------------------------------------

def snow(x: np.ndarray, rng: np.random.Generator, params: tuple) -> np.ndarray:
    mean, std, layer_zoom, threshold, blur_radius, blur_sigma, blend = params
    base = to_unit(x)
    h, w = base.shape[0], base.shape[1]
    layer = rng.normal(loc=mean, scale=std, size=(h, w))
    layer = _clipped_zoom(layer[:, :, None], layer_zoom)
    layer[layer < threshold] = 0.0
    layer = np.clip(layer, 0.0, 1.0)
    angle = rng.uniform(-135.0, -45.0)
    kernel = _line_kernel(blur_radius, blur_sigma, angle)
    layer = ndimage.correlate(layer[:, :, 0], kernel, mode="mirror")[:, :, None]
    whitened = np.maximum(base, (_rec601_gray(base) * 1.5 + 0.5)[:, :, None])
    base = blend * base + (1.0 - blend) * whitened
    return base + layer + np.rot90(layer, k=2, axes=(0, 1))


def frost(x: np.ndarray, rng: np.random.Generator, image_weight: float,
          texture_weight: float, textures: list[np.ndarray]) -> np.ndarray:
    idx = int(rng.integers(len(textures)))
    tex = _cover_center_crop(textures[idx], x.shape[0], x.shape[1])
    return image_weight * to_unit(x) + texture_weight * to_unit(tex)


def _cover_center_crop(tex: np.ndarray, h: int, w: int) -> np.ndarray:
    th, tw = tex.shape[0], tex.shape[1]
    if th < h or tw < w:
        tex = np.tile(tex, (-(-h // th), -(-w // tw), 1))
        th, tw = tex.shape[0], tex.shape[1]
    top = (th - h) // 2
    left = (tw - w) // 2
    return tex[top:top + h, left:left + w]


def fog(x: np.ndarray, rng: np.random.Generator, strength: float, wibbledecay: float) -> np.ndarray:
    base = to_unit(x)
    h, w = base.shape[0], base.shape[1]
    mapsize = 2
    while mapsize < max(h, w):
        mapsize *= 2
    max_val = base.max()
    plasma = _plasma_fractal(mapsize, wibbledecay, rng)[:h, :w]
    base = base + strength * plasma[:, :, None]
    return base * max_val / (max_val + strength)


def brightness(x: np.ndarray, lift: float) -> np.ndarray:
    # lifting the HSV value channel scales RGB by v'/v (hue/saturation fixed)
    base = to_unit(x)
    v = base.max(axis=2)
    v_new = np.clip(v + lift, 0.0, 1.0)
    scale = np.where(v > 0, v_new / np.where(v > 0, v, 1.0), 0.0)
    out = base * scale[:, :, None]
    black = v == 0
    if black.any():
        out[black] = v_new[black][:, None]
    return out


# --- G4: digital -------------------------------------------------------------------

def contrast(x: np.ndarray, factor: float) -> np.ndarray:
    base = to_unit(x)
    means = base.mean(axis=(0, 1), keepdims=True)
    return (base - means) * factor + means


def elastic_transform(x: np.ndarray, rng: np.random.Generator, alpha: float,
                      sigma: float, affine_sigma: float) -> np.ndarray:
    base = to_unit(x)
    h, w = base.shape[0], base.shape[1]
    side = min(h, w)
    alpha, sigma, affine_sigma = alpha * side, sigma * side, affine_sigma * side

    center = np.array([h // 2, w // 2], dtype=np.float64)
    square = side // 3
    src_pts = np.array([center + square,
                        [center[0] + square, center[1] - square],
                        center - square], dtype=np.float64)
    dst_pts = src_pts + rng.uniform(-affine_sigma, affine_sigma, size=src_pts.shape)
    matrix = np.column_stack([dst_pts, np.ones(3)])
    coeff_y = np.linalg.solve(matrix, src_pts[:, 0])
    coeff_x = np.linalg.solve(matrix, src_pts[:, 1])
    grid_y, grid_x = np.meshgrid(np.arange(h, dtype=np.float64),
                                 np.arange(w, dtype=np.float64), indexing="ij")
    ys = coeff_y[0] * grid_y + coeff_y[1] * grid_x + coeff_y[2]
    xs = coeff_x[0] * grid_y + coeff_x[1] * grid_x + coeff_x[2]
    base = bilinear_sample(base, ys, xs)

    dx = rng.uniform(-1.0, 1.0, size=(h, w))
    dy = rng.uniform(-1.0, 1.0, size=(h, w))
    if sigma > 0:
        dx = ndimage.gaussian_filter(dx, sigma, mode="reflect", truncate=3.0)
        dy = ndimage.gaussian_filter(dy, sigma, mode="reflect", truncate=3.0)
    return bilinear_sample(base, grid_y + dy * alpha, grid_x + dx * alpha)


def pixelate(x: np.ndarray, fraction: float) -> np.ndarray:
    img = to_pil(ImageTensor(x))
    w, h = img.size
    box = Image.Resampling.BOX
    small = img.resize((max(1, int(w * fraction)), max(1, int(h * fraction))), resample=box)
    return np.asarray(small.resize((w, h), resample=box), dtype=np.uint8)


def jpeg_compression(x: np.ndarray, quality: int) -> np.ndarray:
    data = encode_image(ImageTensor(x), format="jpeg", quality=quality)
    return np.asarray(decode_image(data).pixels)
