"""Deterministic screenshot renderer for synthetic shop pages.

Pages are drawn on a 448x448 canvas aligned to the 32px agent grid: every
thumbnail origin and size is a multiple of 32, so grid cells tile items
exactly. Price labels are white strips with black bitmap glyphs placed a
fixed 4px below their thumbnail; nothing else on the page is ever brighter
than 0.92 or darker than 0.08, which keeps label detection unambiguous.

All drawing is pure numpy on float64 arrays in [0, 1], a pure function of
the scenario fields.
"""

import colorsys

import numpy as np

from .. import fonts
from ..rng import rng_for
from .types import CANVAS, ItemRegion, Layout, Platform, Rect, Role, Scenario

LABEL_GAP = 4          # gap between thumbnail bottom and label strip
VOTE_RISE = 20         # a label refers to the item VOTE_RISE px above its top edge

PAGE_TINT = {
    Platform.A: (0.907, 0.900, 0.893),
    Platform.B: (0.893, 0.900, 0.907),
    Platform.C: (0.900, 0.900, 0.900),
}
CARD = 0.845
CARD_EDGE = 0.72
BAR = 0.76

# value range for everything that is not label ink/paper
INK_FLOOR = 0.08
PAPER_CEIL = 0.92

_CATEGORY_HUE = {
    "electronics": 0.58,
    "home": 0.10,
    "fashion": 0.90,
    "accessories": 0.34,
}

# (thumb_xy, thumb_side) per layout slot; all multiples of 32
_LIST_SLOTS = [((32, 32 + 96 * i), 64) for i in range(4)]
_GRID_SLOTS = [((64, 32), 96), ((288, 32), 96), ((64, 256), 96), ((288, 256), 96)]
_DETAIL_SLOTS = [((64, 32), 160), ((64, 320), 64)]

LAYOUT_CAPACITY = {Layout.LIST: 4, Layout.GRID: 4, Layout.DETAIL: 2}


class LayoutOverflowError(ValueError):
    pass


def layout_slots(layout: Layout) -> list[tuple[tuple[int, int], int]]:
    if layout == Layout.LIST:
        return list(_LIST_SLOTS)
    if layout == Layout.GRID:
        return list(_GRID_SLOTS)
    return list(_DETAIL_SLOTS)


def _hue_rgb(hue: float, sat: float) -> np.ndarray:
    return np.array(colorsys.hsv_to_rgb(hue % 1.0, sat, 1.0))


def draw_thumbnail(side: int, role: Role, category: str, rng: np.random.Generator) -> np.ndarray:
    """Procedural product art, styled by role.

    Cheap items are flat, bright, plastic-looking; expensive items get dark
    metallic gradients, brushed texture, and a gloss band; fillers sit in
    between. Values are clamped to [0.08, 0.92].
    """
    hue = _CATEGORY_HUE.get(category, 0.5) + rng.uniform(-0.06, 0.06)
    yy, xx = np.mgrid[0:side, 0:side].astype(np.float64) / side
    img = np.zeros((side, side, 3))

    if role == Role.DISTRACTOR:
        bg = _hue_rgb(hue + 0.5, rng.uniform(0.03, 0.08)) * rng.uniform(0.82, 0.88)
        body = _hue_rgb(hue, rng.uniform(0.5, 0.75)) * rng.uniform(0.72, 0.86)
    elif role == Role.TARGET:
        bg = _hue_rgb(hue, rng.uniform(0.05, 0.15)) * rng.uniform(0.16, 0.30)
        body = _hue_rgb(hue, rng.uniform(0.05, 0.22)) * rng.uniform(0.30, 0.50)
    else:
        bg = _hue_rgb(hue + 0.5, rng.uniform(0.05, 0.12)) * rng.uniform(0.60, 0.72)
        body = _hue_rgb(hue, rng.uniform(0.25, 0.45)) * rng.uniform(0.48, 0.64)

    img[:] = bg
    if role == Role.TARGET:
        img *= (0.85 + 0.45 * yy)[..., None]   # vertical sheen

    # main body: ellipse or rounded-rect silhouette
    cy, cx = rng.uniform(0.42, 0.58), rng.uniform(0.42, 0.58)
    ry, rx = rng.uniform(0.26, 0.36), rng.uniform(0.26, 0.36)
    if rng.random() < 0.5:
        mask = ((yy - cy) / ry) ** 2 + ((xx - cx) / rx) ** 2 <= 1.0
    else:
        mask = (np.abs(yy - cy) <= ry) & (np.abs(xx - cx) <= rx)

    if role == Role.DISTRACTOR:
        img[mask] = body
        sy = rng.uniform(0.6, 0.75)
        stripe = (np.abs(yy - sy) < 0.05) & mask
        img[stripe] = _hue_rgb(hue + 0.08, 0.55) * 0.8
    else:
        shaded = body[None, None, :] * (0.8 + 0.5 * yy)[..., None]
        img[mask] = shaded[mask]

    if role == Role.TARGET:
        # secondary block, brushed rows, diagonal gloss
        block = (yy > rng.uniform(0.62, 0.72)) & (np.abs(xx - cx) < rx * 0.8)
        img[block] = body * 0.6
        rows = np.arange(side, dtype=np.float64)
        img += rng.uniform(0.03, 0.06) * np.sin(np.pi * rows / 2)[:, None, None]
        band = np.abs((xx + yy) - rng.uniform(0.7, 1.3)) < 0.06
        img[band] += rng.uniform(0.06, 0.12)
    elif role == Role.FILLER:
        cols = np.arange(side, dtype=np.float64)
        img += rng.uniform(0.0, 0.02) * np.sin(np.pi * cols / 4)[None, :, None]

    return np.clip(img, INK_FLOOR, PAPER_CEIL)


def _card_rect(layout: Layout, tx: int, ty: int, side: int) -> Rect:
    h = 6 + side + LABEL_GAP + fonts.STRIP_H + 4
    if layout == Layout.LIST:
        return Rect(16, ty - 6, 416, h)
    if layout == Layout.GRID:
        return Rect(tx - 16, ty - 6, side + 32, h)
    return Rect(48, ty - 6, 384, h)


def _draw_label(canvas: np.ndarray, text: str, x: int, y: int) -> Rect:
    strip = fonts.render_strip(text)
    canvas[y:y + strip.shape[0], x:x + strip.shape[1]] = strip[..., None]
    return Rect(x, y, strip.shape[1], strip.shape[0])


def label_rect_for(thumb: Rect, price) -> Rect:
    """Where the price label strip for a thumbnail goes (left-aligned below)."""
    h, w = fonts.strip_size(len(fonts.format_price(price)))
    return Rect(thumb.x, thumb.y2 + LABEL_GAP, w, h)


def render_screenshot(scenario: Scenario) -> np.ndarray:
    """Render the page for a scenario (ignoring any stored screenshot)."""
    if len(scenario.items) > LAYOUT_CAPACITY[scenario.layout]:
        raise LayoutOverflowError(
            f"{len(scenario.items)} items exceed {scenario.layout.value} capacity")
    canvas = np.empty((CANVAS, CANVAS, 3))
    canvas[:] = np.array(PAGE_TINT[scenario.platform])

    slots = layout_slots(scenario.layout)
    for idx, item in enumerate(scenario.items):
        (tx, ty), side = slots[idx]
        if (item.bbox.x, item.bbox.y, item.bbox.w, item.bbox.h) != (tx, ty, side, side):
            raise ValueError(f"{item.item_id}: bbox does not match layout slot")
        card = _card_rect(scenario.layout, tx, ty, side)
        canvas[card.y:card.y2, card.x:card.x2] = CARD
        canvas[card.y:card.y + 1, card.x:card.x2] = CARD_EDGE
        canvas[card.y2 - 1:card.y2, card.x:card.x2] = CARD_EDGE

        thumb_rng = rng_for("thumb", scenario.seed, item.item_id, scenario.category)
        art = draw_thumbnail(side, item.role, scenario.category, thumb_rng)
        canvas[ty:ty + side, tx:tx + side] = art

        if scenario.layout in (Layout.LIST, Layout.DETAIL):
            # decorative title bars to the right of the thumbnail
            bar_x = tx + side + 24
            canvas[ty + 8:ty + 18, bar_x:card.x2 - 8] = BAR
            canvas[ty + 26:ty + 32, bar_x:card.x2 - 64] = BAR + 0.04

        got = _draw_label(canvas, fonts.format_price(item.price),
                          item.price_label_bbox.x, item.price_label_bbox.y)
        if got != item.price_label_bbox:
            raise ValueError(f"{item.item_id}: label bbox mismatch (expected "
                             f"{item.price_label_bbox}, drew {got})")

    return np.clip(canvas, 0.0, 1.0)


def vote_point(label: Rect) -> tuple[int, int]:
    """The click point a price label refers to (inside its item's thumbnail)."""
    return label.x + label.w // 2, label.y - VOTE_RISE
