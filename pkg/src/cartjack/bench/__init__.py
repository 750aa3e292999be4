"""Synthetic shop-page benchmark: scenario types, renderer, generator, storage."""

from .types import (
    BenchManifest,
    InstructionStyle,
    ItemRegion,
    Layout,
    Platform,
    Rect,
    Role,
    Scenario,
)
from .generate import BenchConfig, gen_bench, make_instruction
from .render import render_screenshot
from .store import load_bench, load_scenario, write_bench

__all__ = [
    "BenchConfig",
    "BenchManifest",
    "InstructionStyle",
    "ItemRegion",
    "Layout",
    "Platform",
    "Rect",
    "Role",
    "Scenario",
    "gen_bench",
    "load_bench",
    "load_scenario",
    "make_instruction",
    "render_screenshot",
    "write_bench",
]
