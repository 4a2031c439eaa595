"""Bundled example cones and seeded SL(n, Z)-twisted variants of them."""

from __future__ import annotations

import json
import random
from importlib import resources
from pathlib import Path
from typing import Optional

from . import lattice
from .cone import ConeSpec
from .io import cone_to_dict, parse_cone

DEFAULT_SEED = 20240611

# Names of the bundled cones expected to fail validation.
NEGATIVE = ("lens", "nondelzant")


def bundled_names() -> list[str]:
    files = resources.files(__package__).joinpath("corpus")
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def load_bundled(name: str) -> ConeSpec:
    text = resources.files(__package__).joinpath("corpus", f"{name}.json").read_text()
    return parse_cone(text).cone


def bundled() -> dict[str, ConeSpec]:
    return {name: load_bundled(name) for name in bundled_names()}


def random_unimodular(n: int, rng: random.Random, steps: Optional[int] = None) -> list[list[int]]:
    """A random integer matrix of determinant +-1.

    Built from elementary row additions with small multipliers, a row
    permutation and random sign flips.
    """
    D = lattice.identity(n)
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2)
        q = rng.choice((-2, -1, 1, 2))
        D[i] = [a + q * b for a, b in zip(D[i], D[j])]
    rng.shuffle(D)
    for i in range(n):
        if rng.random() < 0.5:
            D[i] = [-a for a in D[i]]
    return D


def twisted_variants(cone: ConeSpec, count: int, seed: int = DEFAULT_SEED) -> list[tuple[list[list[int]], ConeSpec]]:
    rng = random.Random(f"{seed}:{cone.name}")
    out = []
    for t in range(count):
        D = random_unimodular(cone.n, rng)
        out.append((D, cone.transformed(D, f"{cone.name}-twist{t}")))
    return out


def full_corpus(seed: int = DEFAULT_SEED, twists: int = 2) -> dict[str, ConeSpec]:
    """Bundled cones plus ``twists`` twisted variants of each."""
    out = {}
    for name, cone in bundled().items():
        out[name] = cone
        for _, tw in twisted_variants(cone, twists, seed):
            out[tw.name] = tw
    return out


def write_corpus(directory: Path, seed: int = DEFAULT_SEED, twists: int = 2) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, cone in full_corpus(seed, twists).items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(cone_to_dict(cone)) + "\n")
        written.append(path)
    return written
