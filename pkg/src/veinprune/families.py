"""Poset generators, named fixtures, and seeded corpora.

Randomness is driven by ``random.Random`` (the Mersenne Twister), which is
portable and stable across platforms and Python versions, so a generator
description (kind, size, seed) always yields a bit-for-bit identical
poset. Random posets draw each pair (i, j) with i < j in a fixed element
order as a Bernoulli edge and take the transitive closure; the result is
acyclic by construction.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidSpec
from .poset import Poset, _bits

KINDS = ("chain", "antichain", "boolean", "fence", "named", "random",
         "downset_lattice")

FIXTURE_NAMES = ("C3", "Yp", "Vee", "B3", "A2")

_MAX_BOOLEAN = 10
_MAX_DOWNSET_BASE = 10


def _labels_for(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    width = len(str(n - 1))
    return [f"e{i:0{width}d}" for i in range(n)]


def chain_poset(n: int) -> Poset:
    labels = _labels_for(n)
    return Poset.from_relations(labels, list(zip(labels, labels[1:])))


def antichain_poset(n: int) -> Poset:
    return Poset.from_relations(_labels_for(n), [])


def fence_poset(n: int) -> Poset:
    """Zigzag: a < b > c < d > ..."""
    labels = _labels_for(n)
    pairs = []
    for i in range(n - 1):
        if i % 2 == 0:
            pairs.append((labels[i], labels[i + 1]))
        else:
            pairs.append((labels[i + 1], labels[i]))
    return Poset.from_relations(labels, pairs)


def boolean_poset(k: int) -> Poset:
    """The power set of {1, ..., k} ordered by inclusion."""
    if k > _MAX_BOOLEAN:
        raise InvalidSpec(f"boolean size {k} exceeds the cap {_MAX_BOOLEAN}")

    def label(items: tuple[int, ...]) -> str:
        return "{" + ",".join(str(i) for i in items) + "}"

    subsets = []
    for size in range(k + 1):
        subsets.extend(combinations(range(1, k + 1), size))
    labels = [label(s) for s in subsets]
    pairs = []
    for s in subsets:
        present = set(s)
        for extra in range(1, k + 1):
            if extra not in present:
                bigger = tuple(sorted(present | {extra}))
                pairs.append((label(s), label(bigger)))
    return Poset.from_relations(labels, pairs)


def random_poset(size: int, seed: int, edge_prob: float = 0.3) -> Poset:
    """Bernoulli upper-triangular random poset, deterministic in the seed."""
    if size < 1:
        raise InvalidSpec(f"size must be at least 1, got {size}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidSpec(f"edge_prob must lie in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    labels = _labels_for(size)
    pairs = []
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < edge_prob:
                pairs.append((labels[i], labels[j]))
    return Poset.from_relations(labels, pairs)


def downset_lattice(base_size: int, seed: int) -> Poset:
    """The lattice of down-sets of a random base poset, by inclusion.

    The base poset is drawn with edge probability 0.5. Down-set lattices
    are conditionally complete (they are lattices), which makes this the
    corpus of choice for the preservation facts.
    """
    if base_size > _MAX_DOWNSET_BASE:
        raise InvalidSpec(
            f"base size {base_size} exceeds the cap {_MAX_DOWNSET_BASE}")
    base = random_poset(base_size, seed, edge_prob=0.5)
    n = len(base)
    downs = []
    for mask in range(1 << n):
        if all(not base._below[i] & ~mask for i in _bits(mask)):
            downs.append(mask)

    def label(mask: int) -> str:
        return "{" + ",".join(base.labels[i] for i in _bits(mask)) + "}"

    labels = [label(m) for m in downs]
    pairs = []
    for a in downs:
        for b in downs:
            if a != b and not a & ~b:
                pairs.append((label(a), label(b)))
    return Poset.from_relations(labels, pairs)


@dataclass(frozen=True)
class GenSpec:
    """A reproducible description of a generated poset.

    ``edge_prob`` must be present exactly for kind ``random``; ``name``
    must be present exactly for kind ``named``.
    """

    kind: str
    size: int = 1
    seed: int = 0
    edge_prob: float | None = None
    name: str | None = None

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown kind {self.kind!r}")
        if self.size < 1:
            raise InvalidSpec(f"size must be at least 1, got {self.size}")
        if (self.edge_prob is not None) != (self.kind == "random"):
            raise InvalidSpec("edge_prob is required for kind 'random' "
                              "and forbidden otherwise")
        if self.edge_prob is not None and not 0.0 <= self.edge_prob <= 1.0:
            raise InvalidSpec(
                f"edge_prob must lie in [0, 1], got {self.edge_prob}")
        if (self.name is not None) != (self.kind == "named"):
            raise InvalidSpec("name is required for kind 'named' "
                              "and forbidden otherwise")
        if self.name is not None and self.name not in FIXTURE_NAMES:
            raise InvalidSpec(f"unknown fixture {self.name!r}; "
                              f"choose from {FIXTURE_NAMES}")


def generate(spec: GenSpec) -> Poset:
    """Build the poset a GenSpec describes; InvalidSpec on bad input."""
    spec.validate()
    if spec.kind == "chain":
        return chain_poset(spec.size)
    if spec.kind == "antichain":
        return antichain_poset(spec.size)
    if spec.kind == "boolean":
        return boolean_poset(spec.size)
    if spec.kind == "fence":
        return fence_poset(spec.size)
    if spec.kind == "named":
        return fixtures()[spec.name]
    if spec.kind == "random":
        return random_poset(spec.size, spec.seed, spec.edge_prob)
    return downset_lattice(spec.size, spec.seed)


def fixtures() -> dict[str, Poset]:
    """The five named reference posets used throughout the test corpus."""
    return {
        "C3": chain_poset(3),
        "Yp": Poset.from_relations(
            ["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("b", "d")]),
        "Vee": Poset.from_relations(
            ["a", "b", "c"], [("a", "c"), ("b", "c")]),
        "B3": boolean_poset(3),
        "A2": antichain_poset(2),
    }


def random_corpus(count: int, max_size: int, seed: int,
                  edge_prob: float = 0.3) -> list[Poset]:
    """A reproducible list of random posets with sizes up to ``max_size``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        size = rng.randint(1, max_size)
        out.append(random_poset(size, rng.getrandbits(32), edge_prob))
    return out


def downset_corpus(count: int, max_base_size: int, seed: int) -> list[Poset]:
    """A reproducible list of down-set lattices with small bases."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        base = rng.randint(1, max_base_size)
        out.append(downset_lattice(base, rng.getrandbits(32)))
    return out
