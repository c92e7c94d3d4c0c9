"""
Grayscale heatmaps of realized transforms.

Each image is normalized on its own value range and written as a binary
8-bit PGM (magic "P5"), one pixel per matrix entry, row-major.
"""

import logging

import numpy as np

from .exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

PARTS = ("real", "imag", "abs")

# Decimals kept before normalization; roundoff below this never changes a pixel.
SNAP_DECIMALS = 12


def select_part(m, part):
    if part == "real":
        return m.entries.real
    if part == "imag":
        return m.entries.imag
    if part == "abs":
        return np.abs(m.entries)
    raise InvalidArgumentError(f"unknown matrix part {part!r}; choose from {', '.join(PARTS)}")


def heatmap_pixels(values):
    """
    Map values to 0..255 with floor((v - min) / (max - min) * 255 + 0.5).

    A constant image maps to all zeros.
    """
    values = np.round(values, SNAP_DECIMALS)
    v_min = float(values.min())
    v_max = float(values.max())
    if v_max == v_min:
        return np.zeros(values.shape, dtype=np.uint8)
    scaled = np.floor((values - v_min) / (v_max - v_min) * 255 + 0.5)
    return np.clip(scaled, 0, 255).astype(np.uint8)


def encode_pgm(pixels):
    height, width = pixels.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(pixels, dtype=np.uint8).tobytes()


def render_heatmap(m, part="real"):
    """PGM bytes for one part of a matrix."""
    pixels = heatmap_pixels(select_part(m, part))
    logger.debug(f"Rendered {part} heatmap of a {m.dim}x{m.dim} matrix")
    return encode_pgm(pixels)


def write_heatmap(path, m, part="real"):
    data = render_heatmap(m, part)
    with open(path, "wb") as f:
        f.write(data)
    return len(data)
