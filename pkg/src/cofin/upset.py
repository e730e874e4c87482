"""Ultimately periodic subsets of the natural numbers.

An :class:`UpSet` is a finite prefix of membership bits followed by a wheel
that repeats forever.  Every value is kept in canonical form (minimal period
first, then minimal threshold), so structural equality is set equality and
finiteness, cofiniteness and inclusion are all decidable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator


class EnumerationOutOfRange(IndexError):
    """Raised when asking for the k-th member of a set with at most k members."""


@dataclass(frozen=True)
class SetClass:
    """Finite / cofinite / split trichotomy of a subset of N.

    ``size`` is the cardinality for ``finite``, the size of the complement for
    ``cofinite`` and ``None`` for ``split``.
    """

    kind: str
    size: int | None = None

    FINITE = "finite"
    COFINITE = "cofinite"
    SPLIT = "split"

    @property
    def is_finite(self) -> bool:
        return self.kind == self.FINITE

    @property
    def is_cofinite(self) -> bool:
        return self.kind == self.COFINITE

    @property
    def is_split(self) -> bool:
        return self.kind == self.SPLIT

    def __str__(self) -> str:
        if self.size is None:
            return self.kind
        return f"{self.kind}({self.size})"


def _check_bits(bits: str, name: str) -> None:
    if any(b not in "01" for b in bits):
        raise ValueError(f"{name} must be a string of 0/1 bits, got {bits!r}")


def _minimal_period(wheel: str) -> str:
    p = len(wheel)
    for d in range(1, p + 1):
        if p % d == 0 and wheel[:d] * (p // d) == wheel:
            return wheel[:d]
    return wheel


@dataclass(frozen=True, repr=False)
class UpSet:
    """An ultimately periodic subset of N in canonical form.

    ``n`` is a member iff ``prefix[n] == "1"`` for ``n < threshold`` and
    ``wheel[(n - threshold) % period] == "1"`` otherwise.  Build instances with
    :func:`normalize` or the named constructors; the raw constructor does not
    canonicalize.
    """

    threshold: int
    period: int
    prefix: str
    wheel: str

    # -- construction -----------------------------------------------------

    @classmethod
    def raw(cls, prefix: str, wheel: str) -> UpSet:
        return normalize(len(prefix), len(wheel), prefix, wheel)

    @classmethod
    def from_predicate(cls, member: Callable[[int], bool], threshold: int,
                       period: int) -> UpSet:
        """Sample ``member`` on ``[0, threshold + period)`` and canonicalize.

        Exact provided ``member`` is periodic with ``period`` from
        ``threshold`` on.
        """
        bits = "".join("1" if member(n) else "0" for n in range(threshold + period))
        return normalize(threshold, period, bits[:threshold], bits[threshold:])

    @classmethod
    def finite(cls, elements: Iterable[int]) -> UpSet:
        elems = set(elements)
        if any(e < 0 for e in elems):
            raise ValueError("natural numbers only")
        t = max(elems) + 1 if elems else 0
        return cls.from_predicate(elems.__contains__, t, 1)

    @classmethod
    def cofinite(cls, missing: Iterable[int]) -> UpSet:
        return complement(cls.finite(missing))

    @classmethod
    def residue(cls, modulus: int, start: int) -> UpSet:
        """``{start, start + modulus, start + 2*modulus, ...}``."""
        if modulus < 1 or start < 0:
            raise ValueError("residue class needs modulus >= 1 and start >= 0")
        return cls.from_predicate(
            lambda n: n >= start and (n - start) % modulus == 0, start, modulus)

    @classmethod
    def naturals(cls) -> UpSet:
        return cls(0, 1, "", "1")

    @classmethod
    def empty(cls) -> UpSet:
        return cls(0, 1, "", "0")

    @classmethod
    def at_least(cls, n: int) -> UpSet:
        return cls.residue(1, n)

    # -- membership and counting -----------------------------------------

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        if n < self.threshold:
            return self.prefix[n] == "1"
        return self.wheel[(n - self.threshold) % self.period] == "1"

    @cached_property
    def _prefix_members(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.prefix) if b == "1")

    @cached_property
    def _wheel_members(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.wheel) if b == "1")

    @property
    def density(self) -> int:
        """Members per period once the wheel has started."""
        return len(self._wheel_members)

    def members(self, below: int) -> Iterator[int]:
        return (n for n in range(below) if n in self)

    def __iter__(self) -> Iterator[int]:
        n = 0
        while self.density or n < self.threshold:
            if n in self:
                yield n
            n += 1

    def __or__(self, other: UpSet) -> UpSet:
        return combine("union", self, other)

    def __and__(self, other: UpSet) -> UpSet:
        return combine("intersect", self, other)

    def __sub__(self, other: UpSet) -> UpSet:
        return combine("difference", self, other)

    def __invert__(self) -> UpSet:
        return complement(self)

    def __le__(self, other: UpSet) -> bool:
        return subset(self, other)

    def sort_key(self) -> tuple:
        return (self.threshold, self.period, self.prefix, self.wheel)

    # -- predicates -------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self.density == 0 and not self._prefix_members

    @property
    def is_finite(self) -> bool:
        return self.density == 0

    @property
    def is_cofinite(self) -> bool:
        return self.density == self.period

    @property
    def is_infinite(self) -> bool:
        return self.density > 0

    def periodic_part(self) -> UpSet:
        """The purely periodic set that agrees with this one from some point on.

        Two UpSets differ by a finite set iff their periodic parts coincide.
        """
        shift = (-self.threshold) % self.period
        wheel = self.wheel[shift:] + self.wheel[:shift]
        return normalize(0, self.period, "", wheel)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"t": self.threshold, "p": self.period,
                "prefix": self.prefix, "wheel": self.wheel}

    @classmethod
    def from_json(cls, obj: dict) -> UpSet:
        up = normalize(obj["t"], obj["p"], obj["prefix"], obj["wheel"])
        return up

    def to_literal(self) -> str:
        """Shortest literal in the CLI set syntax that denotes this set."""
        if self.is_finite:
            return "{" + ",".join(map(str, self._prefix_members)) + "}"
        if self.is_cofinite:
            missing = [n for n in range(self.threshold) if n not in self]
            if missing == list(range(len(missing))):
                return "k.." if not missing else f"k+{len(missing)}.."
            return "!{" + ",".join(map(str, missing)) + "}"
        if self.density == 1:
            start = select(self, 0)
            if UpSet.residue(self.period, start) == self:
                return f"{self.period}k.." if start == 0 else f"{self.period}k+{start}.."
        return f"per({self.prefix};{self.wheel})"

    def __str__(self) -> str:
        return self.to_literal()

    def __repr__(self) -> str:
        return f"UpSet({self.to_literal()!r})"


def normalize(threshold: int, period: int, prefix: str, wheel: str) -> UpSet:
    """Canonical UpSet for the raw encoding (minimal period, then minimal threshold)."""
    if period < 1:
        raise ValueError("period must be >= 1")
    if threshold < 0 or len(prefix) != threshold or len(wheel) != period:
        raise ValueError("prefix/wheel lengths must match threshold/period")
    _check_bits(prefix, "prefix")
    _check_bits(wheel, "wheel")
    wheel = _minimal_period(wheel)
    while prefix and prefix[-1] == wheel[-1]:
        prefix = prefix[:-1]
        wheel = wheel[-1] + wheel[:-1]
    return UpSet(len(prefix), len(wheel), prefix, wheel)


_OPS = {
    "union": lambda a, b: a or b,
    "intersect": lambda a, b: a and b,
    "difference": lambda a, b: a and not b,
}


def combine(op: str, a: UpSet, b: UpSet) -> UpSet:
    try:
        f = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown set operation {op!r}") from None
    t = max(a.threshold, b.threshold)
    p = math.lcm(a.period, b.period)
    return UpSet.from_predicate(lambda n: f(n in a, n in b), t, p)


def complement(a: UpSet) -> UpSet:
    flip = str.maketrans("01", "10")
    return normalize(a.threshold, a.period, a.prefix.translate(flip),
                     a.wheel.translate(flip))


def classify(a: UpSet) -> SetClass:
    if a.is_finite:
        return SetClass(SetClass.FINITE, len(a._prefix_members))
    if a.is_cofinite:
        return SetClass(SetClass.COFINITE, a.threshold - len(a._prefix_members))
    return SetClass(SetClass.SPLIT)


def subset(a: UpSet, b: UpSet) -> bool:
    return (a - b).is_empty


def almost_subset(a: UpSet, b: UpSet) -> bool:
    """``a \\ b`` is finite."""
    return (a - b).is_finite


def rank(a: UpSet, n: int) -> int:
    """Number of members of ``a`` strictly below ``n``."""
    if n <= a.threshold:
        return a.prefix.count("1", 0, max(n, 0))
    q, r = divmod(n - a.threshold, a.period)
    return len(a._prefix_members) + q * a.density + a.wheel.count("1", 0, r)


def select(a: UpSet, k: int) -> int:
    """The k-th member of ``a`` (0-based), i.e. the enumerating map at ``k``."""
    if k < 0:
        raise ValueError("index must be a natural number")
    head = a._prefix_members
    if k < len(head):
        return head[k]
    if a.density == 0:
        raise EnumerationOutOfRange(f"{a} has only {len(head)} members, asked for index {k}")
    q, r = divmod(k - len(head), a.density)
    return a.threshold + q * a.period + a._wheel_members[r]


def split_alternate(a: UpSet) -> tuple[UpSet, UpSet]:
    """Members of ``a`` with even index, members with odd index."""
    if a.is_finite:
        raise ValueError("split_alternate needs an infinite set")
    t, p = a.threshold, 2 * a.period
    even = UpSet.from_predicate(lambda n: n in a and rank(a, n) % 2 == 0, t, p)
    odd = UpSet.from_predicate(lambda n: n in a and rank(a, n) % 2 == 1, t, p)
    return even, odd


def shift(a: UpSet, s: int) -> UpSet:
    """``{x + s : x in a, x + s >= 0}``."""
    t = max(0, a.threshold + s)
    return UpSet.from_predicate(lambda n: n - s >= 0 and (n - s) in a, t, a.period)


def image(a: UpSet, b: UpSet) -> UpSet:
    """Image of ``b`` under the enumerating map of the infinite set ``a``."""
    if a.is_finite:
        raise ValueError("enumerating map needs an infinite set")
    if b.is_finite:
        return UpSet.finite(select(a, k) for k in b._prefix_members)
    t = max(a.threshold, select(a, b.threshold))
    p = a.period * math.lcm(a.density, b.period) // a.density
    return UpSet.from_predicate(lambda n: n in a and rank(a, n) in b, t, p)


def preimage(a: UpSet, w: UpSet) -> UpSet:
    """``{k : select(a, k) in w}`` for infinite ``a``."""
    if a.is_finite:
        raise ValueError("enumerating map needs an infinite set")
    t = rank(a, max(a.threshold, w.threshold))
    p = a.density * math.lcm(a.period, w.period) // a.period
    return UpSet.from_predicate(lambda k: select(a, k) in w, t, p)


def stabilization_window(*sets: UpSet) -> int:
    """``4 * lcm(periods) + max(thresholds)``: past this, periodic behaviour has settled."""
    return 4 * math.lcm(*(s.period for s in sets)) + max(s.threshold for s in sets)


EVENS = UpSet.residue(2, 0)
ODDS = UpSet.residue(2, 1)
NATURALS = UpSet.naturals()
EMPTY = UpSet.empty()
