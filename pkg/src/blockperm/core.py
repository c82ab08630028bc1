"""Permutations of {1..n} split into consecutive blocks that rise or fall.

A :class:`BlockSpec` cuts {1..n} into consecutive blocks of given lengths and
marks a subset of them as descending.  A permutation is *block-ordered* for
that spec when it strictly increases inside every ascending block and strictly
decreases inside every descending block.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "LimitExceeded",
    "Permutation",
    "BlockSpec",
    "CycleType",
    "Classification",
    "parse_permutation",
    "format_permutation",
    "cycle_decomposition",
    "format_cycles",
    "cycle_type",
    "classify",
    "enumerate_block_ordered",
    "complement_applicable",
]


class LimitExceeded(ValueError):
    """An exhaustive operation would exceed its configured size cap."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: ``images[i-1]`` is the image of ``i``.

    >>> p = Permutation((2, 3, 1))
    >>> p(1), p(2), p(3)
    (2, 3, 1)
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        n = len(self.images)
        if n == 0:
            raise ValueError("empty permutation")
        seen = [False] * (n + 1)
        for v in self.images:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"value {v!r} out of range 1..{n}")
            if seen[v]:
                raise ValueError(f"duplicate value {v}")
            seen[v] = True

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    def is_derangement(self) -> bool:
        return all(v != i for i, v in enumerate(self.images, start=1))

    def is_involution(self) -> bool:
        return all(self.images[v - 1] == i for i, v in enumerate(self.images, start=1))


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation given as space-separated integers, e.g. ``"2 1 3"``."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty permutation text")
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"non-integer token in permutation text: {text!r}") from None
    return Permutation(values)


def format_permutation(p: Permutation) -> str:
    return " ".join(str(v) for v in p.images)


def cycle_decomposition(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles of ``p``, each starting at its minimum, sorted by minimum.

    >>> cycle_decomposition(Permutation((2, 1, 3)))
    ((1, 2), (3,))
    """
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = p(start)
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = p(j)
        cycles.append(tuple(cycle))
    return tuple(cycles)


def format_cycles(p: Permutation) -> str:
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycle_decomposition(p))


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, stored as a non-increasing tuple."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(x, int) or x < 1 for x in self.parts):
            raise ValueError("cycle lengths must be positive integers")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("cycle lengths must be non-increasing")

    @classmethod
    def of(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(tuple(sorted(lengths, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)


def cycle_type(p: Permutation) -> CycleType:
    return CycleType.of(len(c) for c in cycle_decomposition(p))


def complement_applicable(t: CycleType) -> bool:
    """True when every odd part of ``t`` is distinct and no part is 2 mod 4.

    Cycle types of this shape have their block-ordered count unchanged when
    the set of descending blocks is complemented.
    """
    odd = [x for x in t.parts if x % 2]
    return len(odd) == len(set(odd)) and all(x % 4 != 2 for x in t.parts)


@dataclass(frozen=True)
class BlockSpec:
    """Consecutive block lengths plus the set of descending block indices (1-based)."""

    lengths: tuple[int, ...]
    descending: frozenset[int] = frozenset()
    _bounds: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", tuple(self.lengths))
        object.__setattr__(self, "descending", frozenset(self.descending))
        if not self.lengths:
            raise ValueError("at least one block is required")
        if any(not isinstance(a, int) or a < 1 for a in self.lengths):
            raise ValueError("block lengths must be positive integers")
        k = len(self.lengths)
        for i in self.descending:
            if not isinstance(i, int) or not 1 <= i <= k:
                raise ValueError(f"descending index {i!r} out of range 1..{k}")
        bounds = [0]
        for a in self.lengths:
            bounds.append(bounds[-1] + a)
        object.__setattr__(self, "_bounds", tuple(bounds))

    @property
    def n(self) -> int:
        return self._bounds[-1]

    @property
    def k(self) -> int:
        return len(self.lengths)

    def block_of(self, value: int) -> int:
        """1-based index of the block containing ``value``."""
        if not 1 <= value <= self.n:
            raise ValueError(f"value {value} out of range 1..{self.n}")
        return bisect_left(self._bounds, value)

    def interval(self, i: int) -> range:
        """Positions covered by block ``i`` (1-based, inclusive of both ends)."""
        return range(self._bounds[i - 1] + 1, self._bounds[i] + 1)

    def is_descending(self, i: int) -> bool:
        return i in self.descending

    def complement(self) -> "BlockSpec":
        return BlockSpec(self.lengths, frozenset(range(1, self.k + 1)) - self.descending)


@dataclass(frozen=True)
class Classification:
    is_block_ordered: bool
    is_derangement: bool
    is_involution: bool


def classify(p: Permutation, b: BlockSpec) -> Classification:
    if p.n != b.n:
        raise ValueError(f"permutation size {p.n} does not match block total {b.n}")
    ordered = True
    for i in range(1, b.k + 1):
        span = b.interval(i)
        if b.is_descending(i):
            ordered = all(p(j) > p(j + 1) for j in span[:-1])
        else:
            ordered = all(p(j) < p(j + 1) for j in span[:-1])
        if not ordered:
            break
    return Classification(ordered, p.is_derangement(), p.is_involution())


def enumerate_block_ordered(b: BlockSpec, limit: int = 12) -> Iterator[Permutation]:
    """Yield every block-ordered permutation for ``b`` exactly once.

    The value set of each block is chosen in lexicographic order, then written
    ascending or descending as the block demands, so the stream is
    deterministic and its length is always multinomial(n; lengths) regardless
    of which blocks descend.
    """
    if b.n > limit:
        raise LimitExceeded(f"n={b.n} exceeds enumeration limit {limit}")

    def rec(i: int, avail: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == b.k:
            yield ()
            return
        for chosen in combinations(avail, b.lengths[i]):
            chosen_set = set(chosen)
            rest = tuple(v for v in avail if v not in chosen_set)
            block = tuple(reversed(chosen)) if b.is_descending(i + 1) else chosen
            for tail in rec(i + 1, rest):
                yield block + tail

    for flat in rec(0, tuple(range(1, b.n + 1))):
        yield Permutation(flat)
