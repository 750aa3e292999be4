"""Bench directory I/O.

Layout:
    <bench>/manifest.json
    <bench>/scenarios/<id>/scenario.json
    <bench>/scenarios/<id>/screenshot.png   (8-bit RGB)

Pixels are stored as 8-bit PNG; loading returns float64 in [0, 1] (value/255).
"""

import json
from dataclasses import asdict
from decimal import Decimal
from pathlib import Path

import numpy as np
from PIL import Image

from .. import FORMAT_VERSION
from .generate import gen_bench, BenchConfig
from .render import render_screenshot
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


def save_image(img: np.ndarray, path: Path) -> None:
    """Write a [0,1] float image as 8-bit RGB PNG (round-to-nearest)."""
    arr = np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)
    Image.fromarray(arr, mode="RGB").save(path, format="PNG")


def load_image(path: Path) -> np.ndarray:
    arr = np.asarray(Image.open(path).convert("RGB"), dtype=np.float64)
    return arr / 255.0


def scenario_to_dict(s: Scenario) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "scenario_id": s.scenario_id,
        "platform": s.platform.value,
        "layout": s.layout.value,
        "category": s.category,
        "instruction": s.instruction,
        "instruction_style": s.instruction_style.value,
        "constraint_max_price": str(s.constraint_max_price),
        "seed": s.seed,
        "items": [
            {
                "item_id": it.item_id,
                "bbox": it.bbox.to_list(),
                "price": str(it.price),
                "role": it.role.value,
                "price_label_bbox": it.price_label_bbox.to_list(),
            }
            for it in s.items
        ],
    }


def scenario_from_dict(d: dict, screenshot: np.ndarray | None = None) -> Scenario:
    if "format_version" not in d:
        raise ValueError("scenario.json missing format_version")
    items = [
        ItemRegion(
            item_id=it["item_id"],
            bbox=Rect.from_list(it["bbox"]),
            price=Decimal(it["price"]),
            role=Role(it["role"]),
            price_label_bbox=Rect.from_list(it["price_label_bbox"]),
        )
        for it in d["items"]
    ]
    return Scenario(
        scenario_id=d["scenario_id"],
        platform=Platform(d["platform"]),
        layout=Layout(d["layout"]),
        items=items,
        instruction=d["instruction"],
        instruction_style=InstructionStyle(d["instruction_style"]),
        constraint_max_price=Decimal(d["constraint_max_price"]),
        seed=d["seed"],
        category=d.get("category", "electronics"),
        screenshot=screenshot,
    )


def dump_json(obj, path: Path) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def write_bench(out_dir: Path, n: int, seed: int, cfg: BenchConfig | None = None) -> BenchManifest:
    """Generate, render, and persist a bench; returns the manifest."""
    out_dir = Path(out_dir)
    manifest, scenarios = gen_bench(n, seed, cfg)
    (out_dir / "scenarios").mkdir(parents=True, exist_ok=True)
    for s in scenarios:
        s.screenshot = render_screenshot(s)
        s.validate()
        sdir = out_dir / "scenarios" / s.scenario_id
        sdir.mkdir(parents=True, exist_ok=True)
        dump_json(scenario_to_dict(s), sdir / "scenario.json")
        save_image(s.screenshot, sdir / "screenshot.png")
    dump_json(asdict(manifest), out_dir / "manifest.json")
    return manifest


def load_manifest(bench_dir: Path) -> BenchManifest:
    d = json.loads((Path(bench_dir) / "manifest.json").read_text())
    return BenchManifest(**d)


def load_scenario(bench_dir: Path, scenario_id: str, with_screenshot: bool = True) -> Scenario:
    sdir = Path(bench_dir) / "scenarios" / scenario_id
    d = json.loads((sdir / "scenario.json").read_text())
    shot = load_image(sdir / "screenshot.png") if with_screenshot else None
    return scenario_from_dict(d, shot)


def load_bench(bench_dir: Path, with_screenshots: bool = True) -> list[Scenario]:
    manifest = load_manifest(bench_dir)
    return [load_scenario(bench_dir, sid, with_screenshots)
            for sid in manifest.scenario_ids]
