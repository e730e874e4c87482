"""Filters on N of the form Φ(P, Q) = {W : W ⊇ P and Q \\ W finite}.

This class contains the principal filters U(A) = Φ(A, A), the cofinite
filters C(A) = Φ(A, N) and the Fréchet filter Φ(∅, N), and it is closed
under binary meet, binary join, negation and double negation.  A filter is
kept canonical: Q is replaced by P ∪ (periodic part of Q \\ P), so equal
filters have equal fields.
"""

from __future__ import annotations

from dataclasses import dataclass

from cofin.upset import (
    EMPTY, NATURALS, UpSet, complement, select, subset,
)


@dataclass(frozen=True, repr=False)
class FilterRep:
    limit_part: UpSet
    almost_part: UpSet

    @classmethod
    def phi(cls, p: UpSet, q: UpSet) -> FilterRep:
        extra = (q - p).periodic_part() - p
        return cls(p, p | extra)

    @property
    def P(self) -> UpSet:
        return self.limit_part

    @property
    def Q(self) -> UpSet:
        return self.almost_part

    def __contains__(self, w: UpSet) -> bool:
        return member(w, self)

    def __and__(self, other: FilterRep) -> FilterRep:
        return meet(self, other)

    def __or__(self, other: FilterRep) -> FilterRep:
        return join(self, other)

    def __le__(self, other: FilterRep) -> bool:
        return subfilter(self, other)

    def to_literal(self) -> str:
        p, q = self.P, self.Q
        if self == FRECHET:
            return "frechet"
        if self == DISCRETE:
            return "discrete"
        if self == INDISCRETE:
            return "indiscrete"
        if p == q:
            return f"U({p.to_literal()})"
        if self == c_filter(p):
            return f"C({p.to_literal()})"
        return f"phi({p.to_literal()};{q.to_literal()})"

    __str__ = to_literal

    def __repr__(self) -> str:
        return f"FilterRep({self.to_literal()!r})"

    def to_json(self) -> dict:
        return {"P": self.P.to_json(), "Q": self.Q.to_json()}


def u_filter(a: UpSet) -> FilterRep:
    """All supersets of ``a``."""
    return FilterRep.phi(a, a)


def c_filter(a: UpSet) -> FilterRep:
    """All cofinite supersets of ``a``."""
    return FilterRep.phi(a, NATURALS)


FRECHET = FilterRep.phi(EMPTY, NATURALS)
DISCRETE = FilterRep.phi(EMPTY, EMPTY)
INDISCRETE = FilterRep.phi(NATURALS, NATURALS)


def member(w: UpSet, f: FilterRep) -> bool:
    return subset(f.P, w) and (f.Q - w).is_finite


def limit(f: FilterRep) -> UpSet:
    return f.P


def meet(f: FilterRep, g: FilterRep) -> FilterRep:
    """Intersection of the two filters."""
    return FilterRep.phi(f.P | g.P, f.Q | g.Q)


def join(f: FilterRep, g: FilterRep) -> FilterRep:
    """Smallest filter containing both."""
    return FilterRep.phi(f.P & g.P, f.Q & g.Q)


def subfilter(f: FilterRep, g: FilterRep) -> bool:
    """Decide ``f ⊆ g``."""
    return subset(g.P, f.P) and (g.Q - (f.P | f.Q)).is_finite


def neg(f: FilterRep) -> FilterRep:
    return u_filter(complement(f.P))


def double_neg(f: FilterRep) -> FilterRep:
    return u_filter(f.P)


def is_dense(f: FilterRep) -> bool:
    return f.P.is_empty


def implication_member(b: UpSet, f: FilterRep, g: FilterRep) -> bool:
    """``b ∈ (f → g)``, i.e. ``b ∪ U ∈ g`` for every ``U ∈ f``."""
    covered = b | f.P
    return subset(g.P, covered) and (g.Q - (covered | f.Q)).is_finite


# -- witnesses for the closed-form rules -----------------------------------


def implication_counterexample(b: UpSet, f: FilterRep, g: FilterRep) -> UpSet | None:
    """``U ∈ f`` with ``b ∪ U ∉ g`` when ``b ∉ f → g``; ``None`` otherwise."""
    if implication_member(b, f, g):
        return None
    missing = g.P - (b | f.P)
    if not missing.is_empty:
        x = select(missing, 0)
        return f.P | (f.Q - UpSet.finite([x]))
    return f.P | f.Q


def subfilter_witness(f: FilterRep, g: FilterRep) -> UpSet | None:
    """A member of ``f`` outside ``g``, or ``None`` when ``f ⊆ g``."""
    if subfilter(f, g):
        return None
    missing = g.P - f.P
    if not missing.is_empty:
        x = select(missing, 0)
        return f.P | (f.Q - UpSet.finite([x]))
    return f.P | f.Q


def join_witness(w: UpSet, f: FilterRep, g: FilterRep) -> tuple[UpSet, UpSet] | None:
    """``(U, V)`` with ``U ∈ f``, ``V ∈ g`` and ``U ∩ V ⊆ w``, when ``w ∈ f ∨ g``."""
    if not member(w, join(f, g)):
        return None
    outside = complement(w)
    to_g = outside & (g.P | (g.Q - f.Q))
    to_f = outside - to_g
    return w | to_f, w | to_g


def join_obstruction(w: UpSet, f: FilterRep, g: FilterRep) -> UpSet | None:
    """Why ``w ∉ f ∨ g``: a set every ``U ∩ V`` meets outside ``w``.

    Either a common limit point missing from ``w`` (a singleton) or an
    infinite part of ``Q_f ∩ Q_g`` missing from ``w``.
    """
    if member(w, join(f, g)):
        return None
    common = (f.P & g.P) - w
    if not common.is_empty:
        return UpSet.finite([select(common, 0)])
    return (f.Q & g.Q) - w


@dataclass(frozen=True, repr=False)
class BornRep:
    """A bornology on N, stored as the filter of complements of its members."""

    dual: FilterRep

    def __contains__(self, a: UpSet) -> bool:
        return member(complement(a), self.dual)

    def to_literal(self) -> str:
        return f"born {self.dual.to_literal()}"

    __str__ = to_literal

    def __repr__(self) -> str:
        return f"BornRep({self.dual.to_literal()!r})"


def dualize(x: FilterRep | BornRep) -> FilterRep | BornRep:
    """Filter to bornology and back by complementing members."""
    if isinstance(x, BornRep):
        return x.dual
    return BornRep(x)


def extent_born(b: BornRep) -> UpSet:
    return complement(b.dual.P)
