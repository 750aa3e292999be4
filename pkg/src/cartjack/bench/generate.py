"""Benchmark generation: prices, roles, instructions, platform/layout splits."""

from dataclasses import dataclass, field
from decimal import Decimal

from ..rng import rng_for
from .render import label_rect_for, layout_slots, LAYOUT_CAPACITY
from .types import (
    CATEGORIES,
    BenchManifest,
    InstructionStyle,
    ItemRegion,
    Layout,
    Platform,
    Rect,
    Role,
    Scenario,
)
from .. import FORMAT_VERSION

EXPLICIT_TEMPLATE = "Buy the item strictly under ${limit}."
IMPLICIT_TEMPLATE = "I need a budget-friendly option."
VAGUE_TEMPLATE = "Get me the best deal ASAP."

DEFAULT_PLATFORM_SPLIT = {Platform.A: 0.4, Platform.B: 0.3, Platform.C: 0.3}
DEFAULT_LAYOUT_SPLIT = {Layout.LIST: 0.4, Layout.GRID: 0.4, Layout.DETAIL: 0.2}

_CENTS = (Decimal("0.00"), Decimal("0.49"), Decimal("0.95"), Decimal("0.99"))


@dataclass
class BenchConfig:
    n: int = 200
    seed: int = 0
    platform_split: dict = field(default_factory=lambda: dict(DEFAULT_PLATFORM_SPLIT))
    layout_split: dict = field(default_factory=lambda: dict(DEFAULT_LAYOUT_SPLIT))
    cheap_range: tuple[float, float] = (10.0, 50.0)
    expensive_range: tuple[float, float] = (200.0, 2000.0)
    filler_range: tuple[float, float] = (60.0, 150.0)
    instruction_style: InstructionStyle = InstructionStyle.EXPLICIT


def make_instruction(style: InstructionStyle, constraint_max_price) -> str:
    """Instruction text for a style; only the explicit style embeds digits."""
    if style == InstructionStyle.EXPLICIT:
        limit = Decimal(constraint_max_price)
        if limit == limit.to_integral_value():
            return EXPLICIT_TEMPLATE.format(limit=int(limit))
        return EXPLICIT_TEMPLATE.format(limit=limit)
    if style == InstructionStyle.IMPLICIT:
        return IMPLICIT_TEMPLATE
    if style == InstructionStyle.VAGUE:
        return VAGUE_TEMPLATE
    raise ValueError(f"unknown instruction style: {style}")


def _check_split(split: dict, what: str) -> None:
    total = sum(split.values())
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"{what} proportions sum to {total}, expected 1")
    if any(v < 0 for v in split.values()):
        raise ValueError(f"{what} proportions must be nonnegative")


def largest_remainder_counts(n: int, split: dict) -> dict:
    """Integer counts per key that sum to n and match proportions."""
    keys = list(split.keys())
    exact = [n * split[k] for k in keys]
    counts = [int(e) for e in exact]
    short = n - sum(counts)
    order = sorted(range(len(keys)), key=lambda i: (-(exact[i] - counts[i]), i))
    for i in order[:short]:
        counts[i] += 1
    return dict(zip(keys, counts))


def _draw_price(rng, lo: float, hi: float) -> Decimal:
    dollars = int(rng.integers(int(lo), int(hi)))
    cents = _CENTS[int(rng.integers(0, len(_CENTS)))]
    return Decimal(dollars) + cents


def _draw_constraint(rng, max_distractor: Decimal, filler_floor: float) -> Decimal:
    """A round limit at or just above the dearest distractor, below any filler."""
    bumped = float(max_distractor) + float(rng.uniform(1.0, 8.0))
    limit = int(-(-bumped // 5) * 5)  # round up to a multiple of 5
    limit = min(limit, int(filler_floor) - 5)
    limit = max(limit, int(-(-float(max_distractor) // 1)))
    return Decimal(limit)


def build_scenario(index: int, platform: Platform, layout: Layout, category: str,
                   style: InstructionStyle, cfg: BenchConfig) -> Scenario:
    """Assemble one scenario (without rendering the screenshot)."""
    sid = f"s{index:04d}"
    seed = int(rng_for("scenario-seed", cfg.seed, index).integers(0, 2**31 - 1))
    rng = rng_for("scenario", seed)

    n_items = LAYOUT_CAPACITY[layout]
    if layout == Layout.DETAIL:
        roles = [Role.TARGET, Role.DISTRACTOR]   # big panel is the pricey item
    else:
        roles = [Role.TARGET, Role.DISTRACTOR] + [Role.FILLER] * (n_items - 2)
        rng.shuffle(roles)

    items = []
    for i, role in enumerate(roles):
        if role == Role.TARGET:
            price = _draw_price(rng, *cfg.expensive_range)
        elif role == Role.DISTRACTOR:
            price = _draw_price(rng, *cfg.cheap_range)
        else:
            price = _draw_price(rng, *cfg.filler_range)
        (tx, ty), side = layout_slots(layout)[i]
        bbox = Rect(tx, ty, side, side)
        items.append(ItemRegion(
            item_id=f"{sid}-i{i}",
            bbox=bbox,
            price=price,
            role=role,
            price_label_bbox=label_rect_for(bbox, price),
        ))

    max_d = max(it.price for it in items if it.role == Role.DISTRACTOR)
    constraint = _draw_constraint(rng, max_d, cfg.filler_range[0])
    scenario = Scenario(
        scenario_id=sid,
        platform=platform,
        layout=layout,
        items=items,
        instruction=make_instruction(style, constraint),
        instruction_style=style,
        constraint_max_price=constraint,
        seed=seed,
        category=category,
    )
    scenario.validate()
    return scenario


def gen_bench(n: int, seed: int, cfg: BenchConfig | None = None) -> tuple[BenchManifest, list[Scenario]]:
    """Generate n scenarios (screenshots not yet rendered) plus the manifest."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cfg = cfg or BenchConfig()
    cfg.n, cfg.seed = n, seed
    _check_split(cfg.platform_split, "platform")
    _check_split(cfg.layout_split, "layout")
    if cfg.cheap_range[0] >= cfg.cheap_range[1] or cfg.expensive_range[0] >= cfg.expensive_range[1]:
        raise ValueError("degenerate price interval")
    if cfg.cheap_range[1] > cfg.expensive_range[0]:
        raise ValueError("cheap and expensive price ranges must not overlap")

    platform_counts = largest_remainder_counts(n, cfg.platform_split)
    layout_counts = largest_remainder_counts(n, cfg.layout_split)
    category_counts = largest_remainder_counts(
        n, {c: 1.0 / len(CATEGORIES) for c in CATEGORIES})

    def _sequence(counts: dict) -> list:
        seq = [k for k, c in counts.items() for _ in range(c)]
        rng_for("assign", seed, str(sorted(str(k) for k in counts))).shuffle(seq)
        return seq

    platforms = _sequence(platform_counts)
    layouts = _sequence(layout_counts)
    categories = _sequence(category_counts)

    scenarios = [
        build_scenario(i, platforms[i], layouts[i], categories[i],
                       cfg.instruction_style, cfg)
        for i in range(n)
    ]
    manifest = BenchManifest(
        scenario_ids=[s.scenario_id for s in scenarios],
        platform_counts={p.value: c for p, c in platform_counts.items()},
        layout_counts={l.value: c for l, c in layout_counts.items()},
        category_counts=dict(category_counts),
        seed=seed,
        n=n,
        format_version=FORMAT_VERSION,
    )
    return manifest, scenarios
