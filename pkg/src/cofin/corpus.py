"""Random ideals and filters for the sampled suites."""

from __future__ import annotations

import random

from cofin.filt import FilterRep
from cofin.omega import Ideal
from cofin.sampling import random_finite_set, random_infinite, random_upset
from cofin.upset import UpSet, complement


def random_ideal(rng: random.Random, dense_bias: float = 0.4) -> Ideal:
    """A random nonempty in-class ideal.

    With probability ``dense_bias`` the supports are chosen to cover a
    cofinite set, so dense and non-dense ideals both show up often.
    """
    if rng.random() < 0.08:
        extra = [random_infinite(rng)] if rng.random() < 0.5 else []
        return Ideal.build([a for a in extra if a.is_cofinite], has_L=True)
    n = rng.randint(1, 3)
    supports = [random_infinite(rng) for _ in range(n)]
    if rng.random() < dense_bias:
        cover = complement(supports[0]) | random_finite_set(rng)
        if cover.is_infinite:
            supports.append(cover | random_upset(rng, "finite"))
    prin, alm = [], []
    for a in supports:
        (alm if rng.random() < 0.35 else prin).append(a)
    return Ideal.build(prin, alm)


def random_filter(rng: random.Random) -> FilterRep:
    """A random Φ(P, Q); P and Q drawn from every set class."""
    p = random_upset(rng)
    if rng.random() < 0.3:
        p = p & random_upset(rng, "split")
    q = p | random_upset(rng)
    return FilterRep.phi(p, q)


def filter_member(rng: random.Random, f: FilterRep) -> UpSet:
    """A random member of ``f``: P plus Q minus a finite set, plus noise."""
    drop = random_finite_set(rng, below=10)
    return f.P | (f.Q - drop) | (random_upset(rng) if rng.random() < 0.5 else UpSet.empty())

