"""Benchmark domain types and their validation rules."""

from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum

import numpy as np

CANVAS = 448


class Platform(str, Enum):
    A = "A"
    B = "B"
    C = "C"


class Layout(str, Enum):
    LIST = "list"
    GRID = "grid"
    DETAIL = "detail"


class Role(str, Enum):
    TARGET = "target_expensive"
    DISTRACTOR = "distractor_cheap"
    FILLER = "filler"


class InstructionStyle(str, Enum):
    EXPLICIT = "explicit"
    IMPLICIT = "implicit"
    VAGUE = "vague"


CATEGORIES = ("electronics", "home", "fashion", "accessories")


@dataclass(frozen=True)
class Rect:
    """Integer pixel rectangle; x grows right, y grows down."""

    x: int
    y: int
    w: int
    h: int

    @property
    def x2(self) -> int:
        return self.x + self.w

    @property
    def y2(self) -> int:
        return self.y + self.h

    @property
    def center(self) -> tuple[int, int]:
        return self.x + self.w // 2, self.y + self.h // 2

    def contains_point(self, px: int, py: int) -> bool:
        return self.x <= px < self.x2 and self.y <= py < self.y2

    def intersects(self, other: "Rect") -> bool:
        return not (self.x2 <= other.x or other.x2 <= self.x
                    or self.y2 <= other.y or other.y2 <= self.y)

    def inside(self, w: int, h: int) -> bool:
        return self.x >= 0 and self.y >= 0 and self.x2 <= w and self.y2 <= h

    def to_list(self) -> list[int]:
        return [self.x, self.y, self.w, self.h]

    @staticmethod
    def from_list(v) -> "Rect":
        return Rect(int(v[0]), int(v[1]), int(v[2]), int(v[3]))


@dataclass
class ItemRegion:
    item_id: str
    bbox: Rect
    price: Decimal
    role: Role
    price_label_bbox: Rect


@dataclass
class Scenario:
    scenario_id: str
    platform: Platform
    layout: Layout
    items: list[ItemRegion]
    instruction: str
    instruction_style: InstructionStyle
    constraint_max_price: Decimal
    seed: int
    category: str = "electronics"
    screenshot: np.ndarray | None = field(default=None, repr=False)

    @property
    def target(self) -> ItemRegion:
        return next(it for it in self.items if it.role == Role.TARGET)

    @property
    def distractors(self) -> list[ItemRegion]:
        return [it for it in self.items if it.role == Role.DISTRACTOR]

    def item_at(self, px: int, py: int) -> ItemRegion | None:
        """Item whose bbox contains the pixel, or None for background."""
        for it in self.items:
            if it.bbox.contains_point(px, py):
                return it
        return None

    def validate(self) -> None:
        targets = [it for it in self.items if it.role == Role.TARGET]
        if len(targets) != 1:
            raise ValueError(f"{self.scenario_id}: expected exactly one target, "
                             f"got {len(targets)}")
        if not self.distractors:
            raise ValueError(f"{self.scenario_id}: needs at least one distractor")
        tgt = targets[0]
        for d in self.distractors:
            if not tgt.price > d.price:
                raise ValueError(f"{self.scenario_id}: target price {tgt.price} "
                                 f"not above distractor price {d.price}")
        for it in self.items:
            if not it.bbox.inside(CANVAS, CANVAS):
                raise ValueError(f"{self.scenario_id}/{it.item_id}: bbox out of bounds")
            if not it.price_label_bbox.inside(CANVAS, CANVAS):
                raise ValueError(f"{self.scenario_id}/{it.item_id}: label out of bounds")
        for i, a in enumerate(self.items):
            for b in self.items[i + 1:]:
                if a.bbox.intersects(b.bbox):
                    raise ValueError(f"{self.scenario_id}: bboxes overlap "
                                     f"({a.item_id}, {b.item_id})")
        if self.instruction_style == InstructionStyle.EXPLICIT:
            if not self.constraint_max_price < tgt.price:
                raise ValueError(f"{self.scenario_id}: constraint must be below target price")
            min_d = min(d.price for d in self.distractors)
            if not self.constraint_max_price >= min_d:
                raise ValueError(f"{self.scenario_id}: constraint below every distractor")
        if self.screenshot is not None:
            if self.screenshot.shape != (CANVAS, CANVAS, 3):
                raise ValueError(f"{self.scenario_id}: bad screenshot shape "
                                 f"{self.screenshot.shape}")
            if self.screenshot.min() < 0.0 or self.screenshot.max() > 1.0:
                raise ValueError(f"{self.scenario_id}: screenshot values outside [0,1]")


@dataclass
class BenchManifest:
    scenario_ids: list[str]
    platform_counts: dict[str, int]
    layout_counts: dict[str, int]
    category_counts: dict[str, int]
    seed: int
    n: int
    format_version: int
