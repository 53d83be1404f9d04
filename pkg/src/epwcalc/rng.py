"""Deterministic random-stream derivation.

Child generators are split from (seed, label) through SHA-256 so trials are
independent, reproducible across platforms, and stable under reordering.
"""

import hashlib
import random


def derive_rng(seed: int, label: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}|{label}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))
