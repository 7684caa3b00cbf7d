"""Per-severity operator parameters for the two resolution profiles.

``small`` is the 32px-oriented table, ``large`` the 224px-oriented one; an
image picks the profile nearest its min side (<= 64 -> small). Both tables
follow the published common-corruptions benchmark parameterization. Where a
parameter means "stronger" (noise scale, blur radius, displacement, inverse
jpeg quality), it is monotone in severity.
"""

from __future__ import annotations

SMALL = "small"
LARGE = "large"
SMALL_MAX_SIDE = 64  # min image side <= this -> small profile

REFERENCE_SEVERITIES = 5

# glass blur shuffle passes are capped; the reference tables max out at 3 and
# the cap keeps a 224px corruption well under 250 ms on one core.
GLASS_BLUR_MAX_ITERATIONS = 3

TABLES: dict[str, dict[str, tuple]] = {
    # noise scale on [0,1] pixels
    "gaussian_noise": {
        SMALL: (0.04, 0.06, 0.08, 0.09, 0.10),
        LARGE: (0.08, 0.12, 0.18, 0.26, 0.38),
    },
    # poisson rate multiplier (lower = noisier)
    "shot_noise": {
        SMALL: (500, 250, 100, 75, 50),
        LARGE: (60, 25, 12, 5, 3),
    },
    # salt & pepper amount
    "impulse_noise": {
        SMALL: (0.01, 0.02, 0.03, 0.05, 0.07),
        LARGE: (0.03, 0.06, 0.09, 0.17, 0.27),
    },
    # (disk radius, alias blur sigma)
    "defocus_blur": {
        SMALL: ((0.3, 0.4), (0.4, 0.5), (0.5, 0.6), (1, 0.2), (1.5, 0.1)),
        LARGE: ((3, 0.1), (4, 0.5), (6, 0.5), (8, 0.5), (10, 0.5)),
    },
    # (gaussian sigma, max shuffle delta, shuffle iterations)
    "glass_blur": {
        SMALL: ((0.05, 1, 1), (0.25, 1, 1), (0.4, 1, 1), (0.25, 1, 2), (0.4, 1, 2)),
        LARGE: ((0.7, 1, 2), (0.9, 2, 1), (1, 2, 3), (1.1, 3, 2), (1.5, 4, 2)),
    },
    # (line radius, gaussian sigma along the line)
    "motion_blur": {
        SMALL: ((6, 1), (6, 1.5), (6, 2), (8, 2), (9, 2.5)),
        LARGE: ((10, 3), (15, 5), (15, 8), (15, 12), (20, 15)),
    },
    # (zoom stop, zoom step): factors are arange(1, stop, step)
    "zoom_blur": {
        SMALL: ((1.06, 0.01), (1.11, 0.01), (1.16, 0.01), (1.21, 0.01), (1.26, 0.01)),
        LARGE: ((1.11, 0.01), (1.16, 0.01), (1.21, 0.02), (1.26, 0.02), (1.31, 0.03)),
    },
    # (layer mean, layer std, layer zoom, threshold, blur radius, blur sigma, blend)
    "snow": {
        SMALL: (
            (0.1, 0.2, 1, 0.6, 8, 3, 0.95),
            (0.1, 0.2, 1, 0.5, 10, 4, 0.9),
            (0.15, 0.3, 1.75, 0.55, 10, 4, 0.9),
            (0.25, 0.3, 2.25, 0.6, 12, 6, 0.85),
            (0.3, 0.3, 1.25, 0.65, 14, 12, 0.8),
        ),
        LARGE: (
            (0.1, 0.3, 3, 0.5, 10, 4, 0.8),
            (0.2, 0.3, 2, 0.5, 12, 4, 0.7),
            (0.55, 0.3, 4, 0.9, 12, 8, 0.7),
            (0.55, 0.3, 4.5, 0.85, 12, 8, 0.65),
            (0.55, 0.3, 2.5, 0.85, 12, 12, 0.55),
        ),
    },
    # (image weight, texture weight)
    "frost": {
        SMALL: ((1, 0.2), (1, 0.3), (0.9, 0.4), (0.85, 0.4), (0.75, 0.45)),
        LARGE: ((1, 0.4), (0.8, 0.6), (0.7, 0.7), (0.65, 0.7), (0.6, 0.75)),
    },
    # (fog strength, wibble decay)
    "fog": {
        SMALL: ((0.2, 3), (0.5, 3), (0.75, 2.5), (1, 2), (1.5, 1.75)),
        LARGE: ((1.5, 2), (2, 2), (2.5, 1.7), (2.5, 1.5), (3, 1.4)),
    },
    # HSV value-channel lift
    "brightness": {
        SMALL: (0.05, 0.1, 0.15, 0.2, 0.3),
        LARGE: (0.1, 0.2, 0.3, 0.4, 0.5),
    },
    # contrast factor (lower = flatter)
    "contrast": {
        SMALL: (0.75, 0.5, 0.4, 0.3, 0.15),
        LARGE: (0.4, 0.3, 0.2, 0.1, 0.05),
    },
    # (alpha, field sigma, affine sigma), all fractions of the min image side
    "elastic_transform": {
        SMALL: (
            (0.0, 0.0, 0.08),
            (0.05, 0.2, 0.07),
            (0.08, 0.06, 0.06),
            (0.1, 0.04, 0.05),
            (0.1, 0.03, 0.03),
        ),
        LARGE: (
            (2.0, 0.7, 0.1),
            (2.0, 0.08, 0.2),
            (0.05, 0.01, 0.02),
            (0.07, 0.01, 0.02),
            (0.12, 0.01, 0.02),
        ),
    },
    # downsample fraction
    "pixelate": {
        SMALL: (0.95, 0.9, 0.85, 0.75, 0.65),
        LARGE: (0.6, 0.5, 0.4, 0.3, 0.25),
    },
    # jpeg quality
    "jpeg_compression": {
        SMALL: (80, 65, 58, 50, 40),
        LARGE: (25, 18, 15, 10, 7),
    },
}


def profile_for(height: int, width: int) -> str:
    return SMALL if min(height, width) <= SMALL_MAX_SIDE else LARGE


def params_for(kind: str, severity: int, profile: str) -> tuple | float | int:
    return TABLES[kind][profile][severity - 1]
