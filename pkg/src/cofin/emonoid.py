"""The monoid E of enumerating maps of N, with a small fragment of finite maps.

An enumerating map is the increasing injection onto an infinite set A, and
is stored as that image (an :class:`~cofin.upset.UpSet`).  The submonoid F
holds the maps with cofinite image; L holds the rest and is a two-sided
ideal.  :class:`FinallyInjective`, :class:`Retraction` and
:class:`Idempotent` cover the finite-fibre maps N -> N that the
characterization arguments need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from cofin.upset import (
    EVENS, NATURALS, UpSet, complement, image, preimage, rank,
    select, shift, split_alternate, subset,
)


@dataclass(frozen=True, repr=False)
class EMap:
    """The enumerating map of an infinite UpSet."""

    image: UpSet

    def __post_init__(self):
        if self.image.is_finite:
            raise ValueError(f"enumerating map needs an infinite image, got {self.image}")

    def __call__(self, n: int) -> int:
        return select(self.image, n)

    @property
    def in_F(self) -> bool:
        return self.image.is_cofinite

    @property
    def in_L(self) -> bool:
        return not self.image.is_cofinite

    @property
    def is_identity(self) -> bool:
        return self.image == NATURALS

    def preimage(self, w: UpSet) -> UpSet:
        return preimage(self.image, w)

    def apply(self, b: UpSet) -> UpSet:
        """Image of the set ``b``."""
        return image(self.image, b)

    def sort_key(self) -> tuple:
        return self.image.sort_key()

    def to_literal(self) -> str:
        return f"u({self.image.to_literal()})"

    __str__ = to_literal

    def __repr__(self) -> str:
        return f"EMap({self.image.to_literal()!r})"


IDENTITY = EMap(NATURALS)
DOUBLING = EMap(EVENS)


def emap(a: UpSet) -> EMap:
    return EMap(a)


def compose(u: EMap, v: EMap) -> EMap:
    """``u ∘ v``: first ``v``, then ``u``."""
    return EMap(u.apply(v.image))


def compose_all(maps: Iterable[EMap]) -> EMap:
    """Compose left to right as written: ``[f, g, h]`` gives ``f ∘ g ∘ h``."""
    acc = IDENTITY
    for m in maps:
        acc = compose(acc, m)
    return acc


def leq(u: EMap, v: EMap) -> bool:
    return subset(u.image, v.image)


def factor_through(u: EMap, v: EMap) -> EMap | None:
    """``w`` with ``v ∘ w = u`` when ``u <= v``, else ``None``."""
    if not leq(u, v):
        return None
    return EMap(v.preimage(u.image))


def meet(u: EMap, v: EMap) -> EMap | None:
    """Greatest lower bound, or ``None`` when the images meet in a finite set."""
    common = u.image & v.image
    return EMap(common) if common.is_infinite else None


def sigma(k: UpSet | Iterable[int] = (0,)) -> EMap:
    """The map enumerating N minus the finite set ``k``; ``sigma()`` is n -> n+1."""
    if not isinstance(k, UpSet):
        k = UpSet.finite(k)
    if not k.is_finite:
        raise ValueError("sigma needs a finite set")
    return EMap(complement(k))


def factor_sigma(k: UpSet | Iterable[int]) -> list[EMap]:
    """``[sigma_{k_r}, ..., sigma_{k_1}]`` for ``k_1 < ... < k_r``; composes to ``sigma(k)``."""
    if not isinstance(k, UpSet):
        k = UpSet.finite(k)
    if not k.is_finite:
        raise ValueError("sigma needs a finite set")
    return [sigma([x]) for x in sorted(k, reverse=True)]


def split_L(u: EMap) -> tuple[EMap, EMap]:
    """Factor ``u`` in L as ``v ∘ w`` with both factors in L."""
    if u.in_F:
        raise ValueError(f"{u} has cofinite image; it is not in L")
    a = u.image
    b, _ = split_alternate(complement(a))
    v = EMap(a | b)
    w = EMap(v.preimage(a))
    return v, w


def densify(u: EMap) -> EMap:
    """A map ``v`` with ``u ∘ v`` in L (it drops every other member of the image)."""
    return DOUBLING


def atomic_complete(u: EMap, v: EMap) -> tuple[EMap, EMap]:
    """``(h, k)`` with ``u ∘ h = v ∘ k``, for ``u``, ``v`` in F."""
    if not (u.in_F and v.in_F):
        raise ValueError("atomic completion is only guaranteed inside F")
    common = u.image & v.image
    return EMap(u.preimage(common)), EMap(v.preimage(common))


# -- finite maps outside E ----------------------------------------------------


class MFragMap:
    """A finite-fibre map N -> N from the representable fragment."""

    def __call__(self, n: int) -> int:
        raise NotImplementedError

    def fiber(self, y: int) -> list[int]:
        raise NotImplementedError

    def preimage(self, w: UpSet) -> UpSet:
        raise NotImplementedError


@dataclass(frozen=True)
class FinallyInjective(MFragMap):
    """``table[n]`` below ``len(table)``; from there on ``tail(n - cut + offset)``.

    ``offset`` defaults to ``cut``, so the tail is read at the argument itself.
    """

    table: tuple[int, ...]
    tail: EMap
    offset: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if self.offset is None:
            object.__setattr__(self, "offset", len(self.table))
        if any(x < 0 for x in self.table) or self.offset < 0:
            raise ValueError("maps N -> N only")

    @property
    def cut(self) -> int:
        return len(self.table)

    def __call__(self, n: int) -> int:
        if n < self.cut:
            return self.table[n]
        return self.tail(n - self.cut + self.offset)

    def fiber(self, y: int) -> list[int]:
        out = [n for n, x in enumerate(self.table) if x == y]
        if y in self.tail.image:
            j = rank(self.tail.image, y)
            if j >= self.offset:
                out.append(j - self.offset + self.cut)
        return out

    def preimage(self, w: UpSet) -> UpSet:
        head = UpSet.finite(n for n, x in enumerate(self.table) if x in w)
        idx = self.tail.preimage(w) & UpSet.at_least(self.offset)
        return head | shift(idx, self.cut - self.offset)

    def to_literal(self) -> str:
        table = ",".join(map(str, self.table))
        off = "" if self.offset == self.cut else f" @{self.offset}"
        return f"[{table} | {self.tail}{off}]"

    __str__ = to_literal


@dataclass(frozen=True)
class Retraction(MFragMap):
    """``p_A(n) = min{k : n <= u_A(k)}``, a left inverse of ``u_A``."""

    of: UpSet

    def __post_init__(self):
        if self.of.is_finite:
            raise ValueError("retraction needs an infinite set")

    def __call__(self, n: int) -> int:
        # the least k with u_A(k) >= n is the number of members below n
        return rank(self.of, n)

    def fiber(self, y: int) -> list[int]:
        lo = select(self.of, y - 1) + 1 if y > 0 else 0
        return list(range(lo, select(self.of, y) + 1))

    def preimage(self, w: UpSet) -> UpSet:
        a = self.of
        t = max(a.threshold, select(a, w.threshold)) + 1
        p = a.period * w.period
        return UpSet.from_predicate(lambda n: rank(a, n) in w, t, p)


@dataclass(frozen=True)
class Idempotent(MFragMap):
    """``e = u_A ∘ p_A``: rounds ``n`` up to the next member of ``A``."""

    of: UpSet

    def __post_init__(self):
        if self.of.is_finite:
            raise ValueError("idempotent needs an infinite set")

    def __call__(self, n: int) -> int:
        return select(self.of, rank(self.of, n))

    def fiber(self, y: int) -> list[int]:
        if y not in self.of:
            return []
        return Retraction(self.of).fiber(rank(self.of, y))

    def preimage(self, w: UpSet) -> UpSet:
        return Retraction(self.of).preimage(preimage(self.of, w))


def retraction(a: UpSet) -> Retraction:
    return Retraction(a)


def idempotent(a: UpSet) -> Idempotent:
    return Idempotent(a)


def witness_point(m: int, n: int) -> FinallyInjective:
    """A finally injective map sending ``m`` to ``n``.

    The table is the lexicographically least one, ``[0, ..., 0, n]``; the
    tail enumerates everything the table does not hit.
    """
    table = (0,) * m + (n,)
    return FinallyInjective(table, EMap(complement(UpSet.finite(table))), 0)


def monotonize(f: FinallyInjective) -> UpSet:
    """The set of record positions ``{n : k < n implies f(k) < f(n)}``.

    ``f`` composed with the enumerating map of this set is increasing.
    """
    records = []
    best = -1
    for n, x in enumerate(f.table):
        if x > best:
            records.append(n)
            best = x
    # tail values strictly increase, so past the table a position is a record
    # exactly when it beats the table maximum
    j0 = max(rank(f.tail.image, best + 1), f.offset)
    start = f.cut + j0 - f.offset
    return UpSet.finite(records) | UpSet.at_least(start)


def monotone_part(f: FinallyInjective) -> EMap:
    """``f ∘ u_B`` for ``B = monotonize(f)``, as an element of E."""
    b = monotonize(f)
    head = [f(n) for n in b.members(f.cut)]
    start = select(b, len(head))
    tail_idx = UpSet.at_least(start - f.cut + f.offset)
    return EMap(UpSet.finite(head) | f.tail.apply(tail_idx))


def galois_holds(a: UpSet, n: int, k: int) -> bool:
    """``n <= u_A(k)`` iff ``p_A(n) <= k``."""
    return (n <= select(a, k)) == (rank(a, n) <= k)

