"""A decidable fragment of the locale of right ideals of E.

An :class:`Ideal` is a finite union of generators of two kinds, optionally
together with the ideal L of maps whose image has infinite complement:

* ``P(A)`` -- the principal ideal of ``u_A``: maps whose image lies inside A;
* ``Alm(A)`` -- maps whose image lies inside A up to finitely many points.

The class is closed under the action of E, negation and double negation,
and every member/inclusion/density question about it is decidable.  Values
are canonical (redundant generators removed, ``Alm`` supports reduced to
their periodic part), so ``==`` is equality of ideals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from cofin.emonoid import DOUBLING, IDENTITY, EMap, compose, densify, leq
from cofin.sampling import coinfinite_subset, infinite_subset, random_finite_set
from cofin.upset import (
    EMPTY, NATURALS, ODDS, UpSet, almost_subset, complement, select,
    split_alternate, subset,
)


def _sorted(sets: Iterable[UpSet]) -> tuple[UpSet, ...]:
    return tuple(sorted(sets, key=UpSet.sort_key))


@dataclass(frozen=True, repr=False)
class Ideal:
    principal: frozenset = field(default_factory=frozenset)
    almost: frozenset = field(default_factory=frozenset)
    has_L: bool = False

    @classmethod
    def build(cls, principal: Iterable[UpSet] = (), almost: Iterable[UpSet] = (),
              has_L: bool = False) -> Ideal:
        """Canonical ideal for the given generators."""
        prin = {a for a in principal if a.is_infinite}
        alm = {a.periodic_part() for a in almost if a.is_infinite}
        if NATURALS in prin or any(a.is_cofinite for a in alm):
            return cls(frozenset({NATURALS}))
        if has_L:
            # co-infinite generators already sit inside L
            prin = {a for a in prin if a.is_cofinite}
            alm = set()
        alm = {c for c in alm if not any(c != d and almost_subset(c, d) for d in alm)}
        prin = {c for c in prin
                if not any(c != a and subset(c, a) for a in prin)
                and not any(almost_subset(c, d) for d in alm)}
        return cls(frozenset(prin), frozenset(alm), has_L)

    # -- shape ----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not (self.principal or self.almost or self.has_L)

    @property
    def is_whole(self) -> bool:
        return NATURALS in self.principal

    @property
    def generators(self) -> list[tuple[str, UpSet]]:
        return ([("P", a) for a in _sorted(self.principal)]
                + [("Alm", a) for a in _sorted(self.almost)])

    @property
    def support(self) -> UpSet:
        """Union of the generator supports (without L)."""
        acc = EMPTY
        for _, a in self.generators:
            acc = acc | a
        return acc

    def __or__(self, other: Ideal) -> Ideal:
        return union(self, other)

    def __contains__(self, u: EMap) -> bool:
        return member(u, self)

    def to_literal(self) -> str:
        if self.is_empty:
            return "0"
        if self.is_whole:
            return "E"
        parts = [f"{kind}({a.to_literal()})" for kind, a in self.generators]
        if self.has_L:
            parts.insert(0, "L")
        return " | ".join(parts)

    __str__ = to_literal

    def __repr__(self) -> str:
        return f"Ideal({self.to_literal()!r})"


EMPTY_IDEAL = Ideal()
WHOLE = Ideal.build([NATURALS])
L_IDEAL = Ideal(has_L=True)


def principal(a: UpSet) -> Ideal:
    """``P(a)``; empty when ``a`` is finite."""
    return Ideal.build([a])


def almost(a: UpSet) -> Ideal:
    return Ideal.build(almost=[a])


def principal_of(u: EMap) -> Ideal:
    """The principal ideal ``u ∘ E``."""
    return principal(u.image)


def union(*ideals: Ideal) -> Ideal:
    return Ideal.build(
        [a for i in ideals for a in i.principal],
        [a for i in ideals for a in i.almost],
        any(i.has_L for i in ideals))


def member(u: EMap, ideal: Ideal) -> bool:
    e = u.image
    return (any(subset(e, a) for a in ideal.principal)
            or any(almost_subset(e, d) for d in ideal.almost)
            or (ideal.has_L and u.in_L))


def subideal(i: Ideal, j: Ideal) -> bool:
    """Decide ``i ⊆ j``.

    A principal or almost generator lies in a finite union exactly when it lies
    in one of its terms, which reduces everything to set comparisons.
    """
    if i.is_empty or j.is_whole:
        return True
    if i.is_whole or (i.has_L and not j.has_L):
        return False
    for c in i.principal:
        if j.has_L and not c.is_cofinite:
            continue
        if not (any(subset(c, a) for a in j.principal)
                or any(almost_subset(c, d) for d in j.almost)):
            return False
    for c in i.almost:
        if j.has_L:
            continue
        if not any(almost_subset(c, d) for d in j.almost):
            return False
    return True


def separating_witness(i: Ideal, j: Ideal) -> EMap | None:
    """A map in ``i`` but not in ``j``, or ``None`` when ``i ⊆ j``."""
    if subideal(i, j):
        return None
    if i.is_whole:
        return IDENTITY
    if i.has_L and not j.has_L:
        return EMap(_escape_L(j))
    for c in i.principal:
        if not member(EMap(c), j):
            return EMap(c)
    for c in i.almost:
        extra = [select(complement(a), 0) for a in j.principal if subset(c, a)]
        e = c | UpSet.finite(extra)
        if not member(EMap(e), j):
            return EMap(e)
    raise AssertionError(f"inclusion rule disagrees with membership for {i} <= {j}")


def _escape_L(j: Ideal) -> UpSet:
    """An infinite, co-infinite set whose enumerating map avoids every generator of ``j``."""
    reserve = ODDS
    for d in _sorted(j.almost):
        z = complement(d)
        if (z - reserve).is_finite:
            reserve = reserve - split_alternate(z & reserve)[0]
    e = complement(reserve)
    for a in _sorted(j.principal):
        if subset(e, a):
            x = select(complement(a), 0)
            e = e | UpSet.finite([x])
    return e


def action(u: EMap, ideal: Ideal) -> Ideal:
    """``<u ∈ I> = {v : u ∘ v ∈ I}``."""
    if ideal.has_L and u.in_L:
        return WHOLE
    return Ideal.build([u.preimage(a) for a in ideal.principal],
                       [u.preimage(d) for d in ideal.almost],
                       ideal.has_L)


def negate(ideal: Ideal) -> Ideal:
    """``¬I``: maps whose image meets every generator support in a finite set."""
    if ideal.has_L:
        return EMPTY_IDEAL
    return almost(complement(ideal.support))


def double_negate(ideal: Ideal) -> Ideal:
    return negate(negate(ideal))


@dataclass(frozen=True)
class Density:
    """Outcome of a density test, with the evidence that backs it.

    Dense ideals carry ``response``: for any query ``u`` it returns ``v`` with
    ``u ∘ v`` in the ideal.  Non-dense ideals carry ``witness``, a map whose
    action on the ideal is empty.
    """

    dense: bool
    witness: EMap | None = None
    response: Callable[[EMap], EMap] | None = field(default=None, compare=False)

    @property
    def tag(self) -> str:
        return "InJnn" if self.dense else "NotInJnn"


def is_dense(ideal: Ideal) -> Density:
    if ideal.has_L:
        return Density(True, response=densify)
    s = ideal.support
    if not s.is_cofinite:
        return Density(False, witness=EMap(complement(s)))
    supports = [a for _, a in ideal.generators]

    def respond(u: EMap) -> EMap:
        for a in supports:
            trace = u.image & a
            if trace.is_infinite:
                return EMap(u.preimage(a))
        raise AssertionError("a cofinite union must meet every infinite set infinitely")

    return Density(True, response=respond)


def extent(ideal: Ideal) -> UpSet:
    """Union of the images of all members."""
    if ideal.is_empty:
        raise ValueError("the empty ideal has no extent")
    if ideal.has_L or ideal.almost:
        return NATURALS
    return ideal.support


def is_extended(ideal: Ideal) -> bool:
    return not ideal.is_empty and extent(ideal).is_cofinite


def content(a: UpSet) -> Ideal:
    """Maps with image inside ``a``: ``P(a)`` for infinite ``a``, else empty."""
    return principal(a)


def cofinite_via_density(a: UpSet) -> bool:
    return is_dense(content(a)).dense


def implication_member(u: EMap, i: Ideal, j: Ideal) -> bool:
    """``u ∈ (I → J)``, i.e. ``<u ∈ I> ⊆ <u ∈ J>``."""
    return subideal(action(u, i), action(u, j))


def meet_witness(i: Ideal, j: Ideal) -> EMap | None:
    """A common member of ``i`` and ``j``, or ``None`` when they are disjoint."""
    if i.is_empty or j.is_empty:
        return None
    if i.has_L or j.has_L:
        other = j if i.has_L else i
        base = NATURALS if other.has_L else other.generators[0][1]
        return EMap(split_alternate(base)[0])
    for _, c in i.generators:
        for _, d in j.generators:
            common = c & d
            if common.is_infinite:
                return EMap(common)
    return None


def int_meets(i: Ideal, j: Ideal) -> bool:
    return meet_witness(i, j) is not None


def in_translate_of_L(w: EMap, u: EMap) -> bool:
    """``w ∈ u ∘ L``: ``w <= u`` and the part of ``u`` it uses has infinite complement."""
    return leq(w, u) and not u.preimage(w.image).is_cofinite


# -- sampling -------------------------------------------------------------


def sample_member(ideal: Ideal, rng: random.Random) -> EMap:
    """A random element of a nonempty ideal."""
    if ideal.is_empty:
        raise ValueError("the empty ideal has no members")
    choices = [("L", NATURALS)] if ideal.has_L else []
    choices += ideal.generators
    kind, a = rng.choice(choices)
    if kind == "L":
        return EMap(coinfinite_subset(rng, a))
    e = infinite_subset(rng, a)
    if kind == "Alm":
        e = e | random_finite_set(rng)
    return EMap(e)


def fdn_check(ideal: Ideal, rng: random.Random, samples: int = 50) -> dict:
    """Test density through extent plus the lower-bound condition on L.

    ``I`` is dense iff its extent is cofinite and every ``v`` in L below
    ``u_Ext`` has some ``w <= v`` in ``I``.  The second condition is sampled;
    the sample always includes the complement of the generator supports, the
    one place a failure can hide.
    """
    dense = is_dense(ideal).dense
    report = {"ideal": ideal.to_literal(), "dense": dense, "samples": 0}
    if ideal.is_empty:
        report.update(extended=False, condition_ii=None, fdn=False, agrees=not dense)
        return report
    ext = extent(ideal)
    extended = ext.is_cofinite
    report["extended"] = extended
    condition_ii = None
    if extended:
        condition_ii = True
        probes = []
        gap = complement(ideal.support) & ext
        if gap.is_infinite:
            probes.append(coinfinite_subset(rng, gap) if gap.is_cofinite else gap)
        while len(probes) < samples:
            probes.append(coinfinite_subset(rng, ext))
        for b in probes:
            v = EMap(b)
            w = _below_in(v, ideal)
            report["samples"] += 1
            if w is None or not (leq(w, v) and member(w, ideal)):
                condition_ii = False
                report["counterexample"] = v.to_literal()
                break
    report["condition_ii"] = condition_ii
    report["fdn"] = extended and bool(condition_ii)
    report["agrees"] = report["fdn"] == dense
    return report


def _below_in(v: EMap, ideal: Ideal) -> EMap | None:
    if ideal.has_L:
        return compose(v, DOUBLING)
    for _, c in ideal.generators:
        trace = v.image & c
        if trace.is_infinite:
            return EMap(trace)
    return None


def lc_probe(ideal: Ideal, cover: Ideal, rng: random.Random, samples: int = 20) -> dict:
    """Probe the local condition of the double negation topology.

    Samples ``f`` in the dense ideal ``cover`` and checks whether every
    ``<f ∈ I>`` is dense.  If ``I`` is not dense one probe is built on purpose
    (witness of ``I`` composed with the response of ``cover``), so the sampled
    verdict must match the density of ``I`` exactly.
    """
    cover_density = is_dense(cover)
    if not cover_density.dense:
        raise ValueError(f"lc_probe needs a dense cover, got {cover}")
    probes = [sample_member(cover, rng) for _ in range(samples)]
    own = is_dense(ideal)
    if not own.dense:
        w = own.witness
        probes.append(compose(w, cover_density.response(w)))
    all_dense = all(is_dense(action(f, ideal)).dense for f in probes)
    return {"ideal": ideal.to_literal(), "cover": cover.to_literal(),
            "probes": len(probes), "all_actions_dense": all_dense,
            "ideal_dense": own.dense, "consistent": all_dense == own.dense}
