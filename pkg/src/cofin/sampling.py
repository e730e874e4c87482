"""Seeded random generators for sets and enumerating maps."""

from __future__ import annotations

import random

from cofin.emonoid import EMap, FinallyInjective
from cofin.upset import UpSet, normalize, split_alternate

MAX_THRESHOLD = 5
MAX_PERIOD = 4

KINDS = ("finite", "cofinite", "split")


def random_upset(rng: random.Random, kind: str | None = None,
                 max_threshold: int = MAX_THRESHOLD, max_period: int = MAX_PERIOD) -> UpSet:
    """A random canonical UpSet, optionally of a given class."""
    if kind is None:
        kind = rng.choice(KINDS)
    t = rng.randint(0, max_threshold)
    prefix = "".join(rng.choice("01") for _ in range(t))
    if kind == "finite":
        return normalize(t, 1, prefix, "0")
    if kind == "cofinite":
        return normalize(t, 1, prefix, "1")
    if kind != "split":
        raise ValueError(f"unknown set kind {kind!r}")
    while True:
        p = rng.randint(2, max(2, max_period))
        wheel = "".join(rng.choice("01") for _ in range(p))
        if "0" in wheel and "1" in wheel:
            return normalize(t, p, prefix, wheel)


def random_infinite(rng: random.Random, **kw) -> UpSet:
    return random_upset(rng, rng.choice(("cofinite", "split")), **kw)


def random_finite_set(rng: random.Random, below: int = 8, max_size: int = 4) -> UpSet:
    return UpSet.finite(rng.sample(range(below), rng.randint(0, max_size)))


def infinite_subset(rng: random.Random, a: UpSet, tries: int = 8) -> UpSet:
    """A random infinite subset of the infinite set ``a``."""
    for _ in range(tries):
        b = a & random_infinite(rng)
        if b.is_infinite:
            return b
    return a


def coinfinite_subset(rng: random.Random, a: UpSet, tries: int = 8) -> UpSet:
    """A random infinite subset of ``a`` whose complement in N is infinite."""
    for _ in range(tries):
        b = a & random_upset(rng, "split")
        if b.is_infinite:
            return b
    return split_alternate(a)[0]


def random_emap(rng: random.Random, kind: str | None = None) -> EMap:
    """Random element of E; ``kind`` may be ``"F"`` or ``"L"``."""
    if kind is None:
        kind = rng.choice("FL")
    return EMap(random_upset(rng, "cofinite" if kind == "F" else "split"))


def random_frag_map(rng: random.Random) -> FinallyInjective:
    table = tuple(rng.randint(0, 9) for _ in range(rng.randint(0, 5)))
    tail = random_emap(rng)
    return FinallyInjective(table, tail, rng.randint(0, 4))
