"""Fixed 7x5 bitmap glyphs for price labels.

The renderer draws prices with these glyphs (black ink on a white strip) and
the template OCR matches against the same bitmaps, so price parsing is exactly
solvable. Layout constants here are shared by the renderer, the agent's price
reader, and the OCR module; changing them is a format break.
"""

import numpy as np

GLYPH_H = 7
GLYPH_W = 5
SCALE = 2                     # each font pixel becomes SCALE x SCALE screen pixels
ADVANCE = (GLYPH_W + 1) * SCALE   # glyph pitch in screen pixels
MARGIN = 2                    # white border around the glyph row
STRIP_H = GLYPH_H * SCALE + 2 * MARGIN

INK = 0.0
PAPER = 1.0

_ROWS = {
    "0": ["01110", "10001", "10011", "10101", "11001", "10001", "01110"],
    "1": ["00100", "01100", "00100", "00100", "00100", "00100", "01110"],
    "2": ["01110", "10001", "00001", "00010", "00100", "01000", "11111"],
    "3": ["11111", "00010", "00100", "00010", "00001", "10001", "01110"],
    "4": ["00010", "00110", "01010", "10010", "11111", "00010", "00010"],
    "5": ["11111", "10000", "11110", "00001", "00001", "10001", "01110"],
    "6": ["00110", "01000", "10000", "11110", "10001", "10001", "01110"],
    "7": ["11111", "00001", "00010", "00100", "01000", "01000", "01000"],
    "8": ["01110", "10001", "10001", "01110", "10001", "10001", "01110"],
    "9": ["01110", "10001", "10001", "01111", "00001", "00010", "01100"],
    "$": ["00100", "01111", "10100", "01110", "00101", "11110", "00100"],
    ".": ["00000", "00000", "00000", "00000", "00000", "01100", "01100"],
}

CHARSET = "0123456789$."

GLYPHS = {
    ch: np.array([[int(c) for c in row] for row in _ROWS[ch]], dtype=np.float64)
    for ch in CHARSET
}

# scaled ink masks (GLYPH_H*SCALE, GLYPH_W*SCALE), 1.0 where ink
GLYPHS_SCALED = {
    ch: np.kron(g, np.ones((SCALE, SCALE)))
    for ch, g in GLYPHS.items()
}


def strip_size(n_chars: int) -> tuple[int, int]:
    """(height, width) in pixels of a label strip holding n_chars glyphs."""
    w = 2 * MARGIN + (n_chars - 1) * ADVANCE + GLYPH_W * SCALE
    return STRIP_H, w


def render_strip(text: str) -> np.ndarray:
    """Render text onto a white strip; returns (STRIP_H, w) float64 in {0, 1}."""
    for ch in text:
        if ch not in GLYPHS:
            raise ValueError(f"glyph not in charset: {ch!r}")
    h, w = strip_size(len(text))
    strip = np.full((h, w), PAPER)
    for i, ch in enumerate(text):
        x = MARGIN + i * ADVANCE
        mask = GLYPHS_SCALED[ch] > 0.5
        block = strip[MARGIN:MARGIN + GLYPH_H * SCALE, x:x + GLYPH_W * SCALE]
        block[mask] = INK
    return strip


def glyph_slots(n_chars: int) -> list[tuple[int, int]]:
    """Top-left (y, x) of each glyph box within a canonical strip."""
    return [(MARGIN, MARGIN + i * ADVANCE) for i in range(n_chars)]


def format_price(price) -> str:
    """Canonical label text for a price, e.g. '$19.99'."""
    return f"${price:.2f}"
