"""Pixel-buffer representation and PNG/JPEG file I/O.

Images are always 8-bit RGB. Grayscale files are expanded to three identical
channels on load and alpha is dropped; nothing else is normalized. Corruption
math happens on per-channel floats in [0, 1] (see ``corruptions``); this
module only deals in bytes.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError, EncodeError, ImageIOError, ShapeMismatch


@dataclass(frozen=True)
class ImageTensor:
    """Immutable H x W x 3 uint8 pixel buffer."""

    pixels: np.ndarray = field(repr=False)

    def __post_init__(self):
        px = np.asarray(self.pixels, dtype=np.uint8)
        if px.ndim != 3 or px.shape[2] != 3 or px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError(f"expected HxWx3 pixel buffer, got shape {px.shape}")
        px = np.ascontiguousarray(px)
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def channels(self) -> int:
        return 3

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.pixels.shape

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImageTensor):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.pixels, other.pixels))

    def __hash__(self):
        return hash((self.shape, self.tobytes()))


def from_pil(img: Image.Image) -> ImageTensor:
    """Normalize any PIL mode to RGB (grayscale expanded, alpha dropped)."""
    if img.mode != "RGB":
        img = img.convert("RGB")
    return ImageTensor(np.asarray(img, dtype=np.uint8))


def to_pil(img: ImageTensor) -> Image.Image:
    return Image.fromarray(np.asarray(img.pixels), mode="RGB")


def load_image(path: str | Path) -> ImageTensor:
    """Decode a PNG or JPEG file into an RGB ImageTensor."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise ImageIOError(f"cannot read {path}: {exc}") from exc
    return decode_image(data, source=str(path))


def decode_image(data: bytes, source: str = "<bytes>") -> ImageTensor:
    try:
        with Image.open(io.BytesIO(data)) as img:
            img.load()
            return from_pil(img)
    except UnidentifiedImageError as exc:
        raise DecodeError(f"cannot decode {source}: {exc}") from exc
    except OSError as exc:
        raise DecodeError(f"truncated or corrupt image {source}: {exc}") from exc


def save_image(img: ImageTensor, path: str | Path, format: str = "png", quality: int = 90) -> None:
    """Write PNG (lossless, byte round-trips) or JPEG at the given quality."""
    data = encode_image(img, format=format, quality=quality)
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise ImageIOError(f"cannot write {path}: {exc}") from exc


def encode_image(img: ImageTensor, format: str = "png", quality: int = 90) -> bytes:
    fmt = format.lower()
    buf = io.BytesIO()
    if fmt == "png":
        to_pil(img).save(buf, format="PNG")
    elif fmt in ("jpeg", "jpg"):
        if not 1 <= int(quality) <= 100:
            raise EncodeError(f"jpeg quality must be in [1, 100], got {quality}")
        to_pil(img).save(buf, format="JPEG", quality=int(quality))
    else:
        raise EncodeError(f"unsupported format {format!r} (png or jpeg)")
    return buf.getvalue()


def mean_abs_pixel_diff(a: ImageTensor, b: ImageTensor) -> float:
    """Average absolute per-channel difference between two same-shape images."""
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape {a.shape} vs {b.shape}")
    da = a.pixels.astype(np.int16)
    db = b.pixels.astype(np.int16)
    return float(np.abs(da - db).mean())
