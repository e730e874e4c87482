"""Exhaustive model of filters on a small finite set X = {0, ..., n-1}.

Subsets are bit masks, families are frozensets of masks.  Everything here is
brute force on purpose: this module is the oracle the symbolic filter code is
checked against, so it never uses a closed-form rule where enumeration works.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator

MAX_FILTER_N = 5
MAX_FAMILY_N = 4


@dataclass(frozen=True)
class FinUniverse:
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_FILTER_N:
            raise ValueError(f"universe size must be in [0, {MAX_FILTER_N}], got {self.n}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def masks(self) -> range:
        return range(1 << self.n)

    def complement(self, mask: int) -> int:
        return self.full & ~mask

    def family(self, members: Iterable[int]) -> FinFamily:
        return FinFamily(self, frozenset(members))

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(str(i) for i in range(self.n) if mask >> i & 1) + "}"


@dataclass(frozen=True)
class FinFamily:
    universe: FinUniverse
    members: frozenset = field(default_factory=frozenset)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __and__(self, other: FinFamily) -> FinFamily:
        return FinFamily(self.universe, self.members & other.members)

    def __le__(self, other: FinFamily) -> bool:
        return self.members <= other.members

    @cached_property
    def is_upper(self) -> bool:
        return all(m | (1 << i) in self.members
                   for m in self.members for i in range(self.universe.n))

    @cached_property
    def is_filter(self) -> bool:
        return (self.universe.full in self.members and self.is_upper
                and all(a & b in self.members for a in self.members for b in self.members))

    @property
    def limit(self) -> int:
        """Intersection of all members."""
        acc = self.universe.full
        for m in self.members:
            acc &= m
        return acc

    @property
    def extent(self) -> int:
        """Union of all members."""
        acc = 0
        for m in self.members:
            acc |= m
        return acc

    def fmt(self) -> str:
        return "{" + ", ".join(self.universe.fmt(m) for m in self) + "}"


def up(u: FinUniverse, a: int) -> FinFamily:
    """The principal filter of all supersets of ``a``."""
    return u.family(m for m in u.masks() if m & a == a)


def cofinite_family(u: FinUniverse) -> FinFamily:
    """Subsets with finite complement; on a finite universe that is everything."""
    return u.family(u.masks())


def c_filter(u: FinUniverse, a: int) -> FinFamily:
    return cofinite_family(u) & up(u, a)


def meets(u: FinUniverse, a: int) -> FinFamily:
    """The upper family of subsets that meet ``a``."""
    return u.family(m for m in u.masks() if m & a)


def interior(s: FinFamily) -> FinFamily:
    """Largest filter inside the nonempty upper family ``s``."""
    if not s.members:
        raise ValueError("interior needs a nonempty family")
    if not s.is_upper:
        raise ValueError("interior needs an upper family")
    return FinFamily(s.universe, frozenset(
        x for x in s.members if all(x & y in s.members for y in s.members)))


def upper_families(u: FinUniverse) -> Iterator[FinFamily]:
    """Every upper family of subsets of X, built top-down mask by mask."""
    order = sorted(u.masks(), key=lambda m: (-bin(m).count("1"), m))
    chosen: set[int] = set()

    def covers(m: int) -> Iterator[int]:
        return (m | (1 << i) for i in range(u.n) if not m >> i & 1)

    def walk(i: int) -> Iterator[FinFamily]:
        if i == len(order):
            yield u.family(chosen)
            return
        m = order[i]
        yield from walk(i + 1)
        if all(c in chosen for c in covers(m)):
            chosen.add(m)
            yield from walk(i + 1)
            chosen.discard(m)

    yield from walk(0)


def all_families(u: FinUniverse) -> Iterator[FinFamily]:
    """All 2^(2^n) families; only for the smallest universes."""
    if u.n > MAX_FAMILY_N:
        raise ValueError(f"family enumeration capped at n = {MAX_FAMILY_N}")
    masks = list(u.masks())
    for code in range(1 << len(masks)):
        yield u.family(m for j, m in enumerate(masks) if code >> j & 1)


def all_filters(u: FinUniverse) -> list[FinFamily]:
    """All filters on X in lexicographic order of their sorted member lists."""
    return list(_filters(u))


@lru_cache(maxsize=None)
def _filters(u: FinUniverse) -> tuple[FinFamily, ...]:
    found = {f.members: f for f in upper_families(u) if f.members and f.is_filter}
    return tuple(found[k] for k in sorted(found, key=sorted))


def _require_filter(*fs: FinFamily) -> None:
    for f in fs:
        if not f.is_filter:
            raise ValueError(f"not a filter: {f.fmt()}")


def heyting_bruteforce(f: FinFamily, g: FinFamily) -> FinFamily:
    """Largest filter h with h & f <= g, found by scanning every filter."""
    _require_filter(f, g)
    candidates = [h for h in all_filters(f.universe) if (h & f) <= g]
    best = max(candidates, key=len)
    if not all(h <= best for h in candidates):
        raise AssertionError("no largest candidate: Filt(X) is not a Heyting algebra?")
    return best


def heyting_formula(f: FinFamily, g: FinFamily) -> FinFamily:
    _require_filter(f, g)
    u = f.universe
    return u.family(a for a in u.masks() if all(a | x in g for x in f))


def negation(f: FinFamily) -> FinFamily:
    return heyting_bruteforce(f, up(f.universe, f.universe.full))


def generated_filter(u: FinUniverse, family: Iterable[int]) -> FinFamily:
    """Smallest filter containing every set in ``family`` (empty family gives {X})."""
    gens = list(dict.fromkeys(family))
    bottoms = {u.full}
    for r in range(1, len(gens) + 1):
        for combo in combinations(gens, r):
            acc = u.full
            for m in combo:
                acc &= m
            bottoms.add(acc)
    return u.family(m for m in u.masks() if any(m & b == b for b in bottoms))


def dualize(f: FinFamily) -> FinFamily:
    """Complement every member: filters become bornologies and back."""
    u = f.universe
    return u.family(u.complement(m) for m in f.members)


def clu1_check(u: FinUniverse) -> list[dict]:
    """Verify the items of the adjunctions C -| lim -| U on X by total enumeration.

    Returns one record per item, ``{"item", "status", "counterexample"?}``.
    """
    if u.n > MAX_FAMILY_N:
        raise ValueError(f"clu1_check capped at n = {MAX_FAMILY_N}")
    subsets = list(u.masks())
    filters = all_filters(u)
    fmt = u.fmt
    frechet = cofinite_family(u)
    indiscrete = up(u, u.full)
    discrete = up(u, 0)

    def neg(f):
        return heyting_bruteforce(f, indiscrete)

    def first(cases):
        return next((c for c in cases), None)

    items = {}
    items["clu1.i"] = first(
        fmt(a) for a in subsets if c_filter(u, a).limit != a or up(u, a).limit != a)
    items["clu1.ii"] = first(
        f"A={fmt(a)} F={f.fmt()}" for a in subsets for f in filters
        if (c_filter(u, a) <= f) != (f.limit & a == f.limit)
        or (f <= up(u, a)) != (f.limit & a == a))
    items["clu1.iii"] = first(
        f"A={fmt(a)} F={f.fmt()}" for a in subsets for f in filters
        if c_filter(u, a | f.limit) != c_filter(u, a) & f)
    items["clu1.iv"] = first(
        f.fmt() for f in filters
        if not (up(u, f.limit) == heyting_bruteforce(frechet, f) == neg(neg(f))))
    items["clu1.v"] = first(
        f.fmt() for f in filters if (neg(neg(f)) == discrete) != (f.limit == 0))
    principal = {up(u, a) for a in subsets}
    items["clu1.vi"] = first(
        f.fmt() for f in filters
        if (neg(neg(f)) == f) != (f in principal)
        or (f <= frechet) != (f == c_filter(u, f.limit)))
    report = []
    for item, bad in items.items():
        rec = {"item": item, "status": "pass" if bad is None else "fail"}
        if bad is not None:
            rec["counterexample"] = bad
        report.append(rec)
    return report
