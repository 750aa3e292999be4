"""Deterministic RNG streams derived from (seed, purpose) keys.

Every random draw in the toolkit goes through rng_for so that results are
reproducible across runs, platforms, and worker counts. Strings are hashed
with sha256, never with Python's salted hash().
"""

import hashlib

import numpy as np


def _key_to_int(key) -> int:
    if isinstance(key, (int, np.integer)):
        return int(key) & 0xFFFFFFFFFFFFFFFF
    if isinstance(key, str):
        digest = hashlib.sha256(key.encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "little")
    raise TypeError(f"rng key must be int or str, got {type(key).__name__}")


def rng_for(*keys) -> np.random.Generator:
    """A PCG64 generator seeded from an ordered tuple of ints/strings."""
    if not keys:
        raise ValueError("at least one key required")
    entropy = [_key_to_int(k) for k in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))
