"""Corruption set: 15 operator kinds x severities 1..5, deterministic under seed."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from ..errors import EmptySelection, MissingAsset, SeverityOutOfRange
from ..image import ImageTensor, load_image
from ..rng import RngStream
from . import ops, params
from .params import LARGE, SMALL, profile_for


class CorruptionKind(str, enum.Enum):
    GAUSSIAN_NOISE = "gaussian_noise"
    SHOT_NOISE = "shot_noise"
    IMPULSE_NOISE = "impulse_noise"
    DEFOCUS_BLUR = "defocus_blur"
    GLASS_BLUR = "glass_blur"
    MOTION_BLUR = "motion_blur"
    ZOOM_BLUR = "zoom_blur"
    SNOW = "snow"
    FROST = "frost"
    FOG = "fog"
    BRIGHTNESS = "brightness"
    CONTRAST = "contrast"
    ELASTIC_TRANSFORM = "elastic_transform"
    PIXELATE = "pixelate"
    JPEG_COMPRESSION = "jpeg_compression"

    def __str__(self) -> str:
        return self.value


CANONICAL_KINDS: tuple[CorruptionKind, ...] = tuple(CorruptionKind)

GROUPS: dict[str, tuple[CorruptionKind, ...]] = {
    "G1": (CorruptionKind.GAUSSIAN_NOISE, CorruptionKind.SHOT_NOISE,
           CorruptionKind.IMPULSE_NOISE),
    "G2": (CorruptionKind.DEFOCUS_BLUR, CorruptionKind.GLASS_BLUR,
           CorruptionKind.MOTION_BLUR, CorruptionKind.ZOOM_BLUR),
    "G3": (CorruptionKind.SNOW, CorruptionKind.FROST, CorruptionKind.FOG,
           CorruptionKind.BRIGHTNESS),
    "G4": (CorruptionKind.CONTRAST, CorruptionKind.ELASTIC_TRANSFORM,
           CorruptionKind.PIXELATE, CorruptionKind.JPEG_COMPRESSION),
}


def group_of(kind: CorruptionKind) -> str:
    for name, members in GROUPS.items():
        if kind in members:
            return name
    raise KeyError(kind)


def kinds_in_groups(groups) -> list[CorruptionKind]:
    """Kinds belonging to the selected groups, in canonical order."""
    groups = set(groups)
    if not groups:
        raise EmptySelection("no corruption groups selected")
    unknown = groups - GROUPS.keys()
    if unknown:
        raise ValueError(f"unknown corruption groups: {sorted(unknown)}")
    selected = {kind for g in groups for kind in GROUPS[g]}
    return [kind for kind in CANONICAL_KINDS if kind in selected]


_FROST_NAMES = tuple(f"frost{i}.png" for i in range(1, 6))


def _load_frost_textures(directory: Path | None) -> list[np.ndarray]:
    if directory is None:
        base = resources.files("teco.corruptions") / "assets" / "frost"
        files = [base / name for name in _FROST_NAMES]
    else:
        directory = Path(directory)
        files = [directory / name for name in _FROST_NAMES if (directory / name).is_file()]
        if not files:
            raise MissingAsset(
                f"frost asset directory {directory} has none of {', '.join(_FROST_NAMES)}")
    textures = []
    for f in files:
        textures.append(np.asarray(load_image(f).pixels))
    return textures


@dataclass
class CorruptionBank:
    """An ordered corruption set D with K kinds and severities 1..max_severity."""

    kinds: tuple[CorruptionKind, ...] = CANONICAL_KINDS
    max_severity: int = 5
    profile: str | None = None  # None = pick per image by min side
    frost_dir: Path | None = None
    _frost_cache: list[np.ndarray] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.kinds = tuple(CorruptionKind(k) for k in self.kinds)
        if not self.kinds:
            raise EmptySelection("corruption bank needs at least one kind")
        if len(set(self.kinds)) != len(self.kinds):
            raise ValueError("corruption kinds must be distinct")
        if not 1 <= self.max_severity <= params.REFERENCE_SEVERITIES:
            raise SeverityOutOfRange(
                f"max_severity must be in [1, {params.REFERENCE_SEVERITIES}], "
                f"got {self.max_severity}")
        if self.profile not in (None, SMALL, LARGE):
            raise ValueError(f"profile must be small/large/None, got {self.profile!r}")

    @property
    def K(self) -> int:
        return len(self.kinds)

    def kind_index(self, kind: CorruptionKind) -> int:
        return self.kinds.index(CorruptionKind(kind))

    def _frost_textures(self) -> list[np.ndarray]:
        if self._frost_cache is None:
            self._frost_cache = _load_frost_textures(self.frost_dir)
        return self._frost_cache

    def apply(self, kind: CorruptionKind, severity: int, img: ImageTensor,
              rng: RngStream) -> ImageTensor:
        """Apply one corruption at one severity; pure in (kind, severity, pixels, seed)."""
        kind = CorruptionKind(kind)
        severity = int(severity)
        if not 1 <= severity <= self.max_severity:
            raise SeverityOutOfRange(
                f"severity {severity} outside [1, {self.max_severity}]")
        profile = self.profile or profile_for(img.height, img.width)
        p = params.params_for(kind.value, severity, profile)
        gen = rng.generator
        x = img.pixels

        if kind is CorruptionKind.GAUSSIAN_NOISE:
            out = ops.gaussian_noise(x, gen, p)
        elif kind is CorruptionKind.SHOT_NOISE:
            out = ops.shot_noise(x, gen, p)
        elif kind is CorruptionKind.IMPULSE_NOISE:
            out = ops.impulse_noise(x, gen, p)
        elif kind is CorruptionKind.DEFOCUS_BLUR:
            out = ops.defocus_blur(x, p[0], p[1])
        elif kind is CorruptionKind.GLASS_BLUR:
            out = ops.glass_blur(x, gen, p[0], p[1], p[2])
        elif kind is CorruptionKind.MOTION_BLUR:
            out = ops.motion_blur(x, gen, p[0], p[1])
        elif kind is CorruptionKind.ZOOM_BLUR:
            out = ops.zoom_blur(x, p[0], p[1])
        elif kind is CorruptionKind.SNOW:
            out = ops.snow(x, gen, p)
        elif kind is CorruptionKind.FROST:
            out = ops.frost(x, gen, p[0], p[1], self._frost_textures())
        elif kind is CorruptionKind.FOG:
            out = ops.fog(x, gen, p[0], p[1])
        elif kind is CorruptionKind.BRIGHTNESS:
            out = ops.brightness(x, p)
        elif kind is CorruptionKind.CONTRAST:
            out = ops.contrast(x, p)
        elif kind is CorruptionKind.ELASTIC_TRANSFORM:
            out = ops.elastic_transform(x, gen, p[0], p[1], p[2])
        elif kind is CorruptionKind.PIXELATE:
            out = ops.pixelate(x, p)
        elif kind is CorruptionKind.JPEG_COMPRESSION:
            out = ops.jpeg_compression(x, p)
        else:  # pragma: no cover
            raise KeyError(kind)

        if out.dtype != np.uint8:
            out = ops.quantize(out)
        return ImageTensor(out)


def parse_kind_selection(spec: str) -> tuple[CorruptionKind, ...]:
    """Parse a CLI selection: 'all', group names (G1,G3), or kind names."""
    spec = spec.strip()
    if spec.lower() == "all":
        return CANONICAL_KINDS
    tokens = [t.strip() for t in spec.split(",") if t.strip()]
    if not tokens:
        raise EmptySelection("empty corruption selection")
    if all(t.upper() in GROUPS for t in tokens):
        return tuple(kinds_in_groups({t.upper() for t in tokens}))
    try:
        selected = {CorruptionKind(t.lower()) for t in tokens}
    except ValueError as exc:
        raise ValueError(f"unknown corruption kind in {spec!r}: {exc}") from exc
    return tuple(k for k in CANONICAL_KINDS if k in selected)
