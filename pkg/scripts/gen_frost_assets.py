"""Regenerate the packaged frost textures.

Five 256x256 textures built from seeded fractal noise (diamond-square),
thresholded into crystalline patches and blurred, with a slight blue tint.
Committed once as src/teco/corruptions/assets/frost/frost{1..5}.png; rerun
only if the recipe changes.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from scipy import ndimage

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from teco.corruptions.ops import _plasma_fractal  # noqa: E402
from teco.image import ImageTensor, save_image  # noqa: E402
from teco.rng import RngStream  # noqa: E402

SIZE = 256
OUT_DIR = Path(__file__).resolve().parents[1] / "src" / "teco" / "corruptions" / "assets" / "frost"


def make_texture(seed: int, decay: float, threshold_q: float) -> np.ndarray:
    rng = RngStream(seed)
    coarse = _plasma_fractal(SIZE, decay, rng.child("coarse").generator)
    fine = _plasma_fractal(SIZE, 1.6, rng.child("fine").generator)

    crystals = (coarse > np.quantile(coarse, threshold_q)).astype(np.float64)
    crystals = ndimage.gaussian_filter(crystals, 1.5)
    grain = ndimage.gaussian_filter(fine, 0.8)

    v = 0.45 + 0.4 * crystals + 0.25 * grain
    v = np.clip(v, 0.0, 1.0)
    rgb = np.stack([v * 0.94, v * 0.97, v], axis=-1)
    return np.floor(np.clip(rgb, 0, 1) * 255.0 + 0.5).astype(np.uint8)


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    recipes = [
        (101, 2.6, 0.55),
        (202, 2.2, 0.60),
        (303, 2.0, 0.50),
        (404, 2.4, 0.65),
        (505, 1.9, 0.58),
    ]
    for i, (seed, decay, q) in enumerate(recipes, start=1):
        tex = make_texture(seed, decay, q)
        path = OUT_DIR / f"frost{i}.png"
        save_image(ImageTensor(tex), path, format="png")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
