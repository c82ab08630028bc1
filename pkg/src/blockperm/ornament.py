"""Colored necklaces and ornaments (multisets of necklaces).

A necklace is a directed cycle of colors taken up to rotation; we store the
lexicographically minimal rotation.  An ornament collects necklaces with
multiplicity.  The predicates here classify ornaments relative to a
:class:`~blockperm.core.BlockSpec`: compatibility (color counts match the
block lengths), invertibility (the ornament is the image of exactly one
block-ordered permutation), and aperiodicity (every necklace is 1-repeating).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .core import BlockSpec, CycleType, LimitExceeded

__all__ = [
    "Necklace",
    "Ornament",
    "NotInvertible",
    "PeriodInfo",
    "DescendingCounts",
    "canonicalize_necklace",
    "fundamental_period",
    "descending_counts",
    "necklace_sort_key",
    "necklace_multiplicities",
    "is_compatible",
    "invertibility_violations",
    "is_invertible",
    "ensure_invertible",
    "is_aperiodic",
    "ornament_cycle_type",
    "format_necklace",
    "format_ornament",
    "parse_ornament",
    "enumerate_ornaments",
    "ornaments_with_cycle_type",
]


def _min_rotation(colors: tuple[int, ...]) -> tuple[int, ...]:
    best = colors
    for r in range(1, len(colors)):
        rot = colors[r:] + colors[:r]
        if rot < best:
            best = rot
    return best


@dataclass(frozen=True)
class Necklace:
    """A directed color cycle stored in its lexicographically minimal rotation."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        if not self.colors:
            raise ValueError("empty necklace")
        if any(not isinstance(c, int) or c < 1 for c in self.colors):
            raise ValueError(f"colors must be positive integers: {self.colors}")
        if self.colors != _min_rotation(self.colors):
            raise ValueError(f"{self.colors} is not in canonical rotation")

    @property
    def length(self) -> int:
        return len(self.colors)


def canonicalize_necklace(colors: Iterable[int]) -> Necklace:
    """Build a necklace from any rotation of its color sequence.

    >>> canonicalize_necklace((2, 1, 2)).colors
    (1, 2, 2)
    """
    t = tuple(colors)
    if not t:
        raise ValueError("empty necklace")
    return Necklace(_min_rotation(t))


@dataclass(frozen=True)
class PeriodInfo:
    period: tuple[int, ...]
    repeats: int


@lru_cache(maxsize=65536)
def fundamental_period(nk: Necklace) -> PeriodInfo:
    """Shortest block whose repetition gives the necklace; ``repeats`` is maximal."""
    m = nk.length
    for p in range(1, m + 1):
        if m % p == 0 and nk.colors[:p] * (m // p) == nk.colors:
            return PeriodInfo(nk.colors[:p], m // p)
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class DescendingCounts:
    in_period: int
    total: int


def descending_counts(nk: Necklace, b: BlockSpec) -> DescendingCounts:
    """How many descending-colored vertices the fundamental period and the whole necklace hold."""
    bad = [c for c in nk.colors if c > b.k]
    if bad:
        raise ValueError(f"color {bad[0]} out of range 1..{b.k}")
    info = fundamental_period(nk)
    in_period = sum(1 for c in info.period if c in b.descending)
    return DescendingCounts(in_period, in_period * info.repeats)


def necklace_sort_key(nk: Necklace) -> tuple[int, tuple[int, ...]]:
    # length descending, then color sequence ascending
    return (-nk.length, nk.colors)


@dataclass(frozen=True)
class Ornament:
    """A multiset of necklaces, stored sorted (length descending, then lex)."""

    necklaces: tuple[Necklace, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "necklaces", tuple(self.necklaces))
        keys = [necklace_sort_key(nk) for nk in self.necklaces]
        if keys != sorted(keys):
            raise ValueError("necklaces are not in canonical ornament order")

    @classmethod
    def of(cls, necklaces: Iterable[Necklace]) -> "Ornament":
        return cls(tuple(sorted(necklaces, key=necklace_sort_key)))

    @property
    def size(self) -> int:
        return sum(nk.length for nk in self.necklaces)

    def color_counts(self) -> Counter:
        counts: Counter = Counter()
        for nk in self.necklaces:
            counts.update(nk.colors)
        return counts


@lru_cache(maxsize=65536)
def necklace_multiplicities(o: Ornament) -> tuple[tuple[Necklace, int], ...]:
    """Distinct necklaces of ``o`` with their multiplicities, in ornament order."""
    out: list[list] = []
    for nk in o.necklaces:
        if out and out[-1][0] == nk:
            out[-1][1] += 1
        else:
            out.append([nk, 1])
    return tuple((nk, m) for nk, m in out)


def is_compatible(o: Ornament, b: BlockSpec) -> bool:
    """True when exactly ``lengths[i-1]`` vertices carry color ``i``, for every ``i``."""
    counts = o.color_counts()
    if any(c > b.k for c in counts):
        return False
    return all(counts.get(i, 0) == a for i, a in enumerate(b.lengths, start=1))


class NotInvertible(ValueError):
    """The ornament is not the image of any block-ordered permutation."""

    def __init__(self, condition: int, necklace: Necklace):
        self.condition = condition
        self.necklace = necklace
        super().__init__(
            f"invertibility condition {condition} violated by necklace "
            f"{format_necklace(necklace)}"
        )


def invertibility_violations(o: Ornament, b: BlockSpec) -> tuple[tuple[int, Necklace], ...]:
    """Violations of the three image conditions, as (condition, necklace) pairs.

    1. a necklace whose fundamental period holds an even number of
       descending-colored vertices must be 1-repeating;
    2. one whose period holds an odd number must be 1- or 2-repeating;
    3. a necklace with an odd total number of descending-colored vertices
       must appear exactly once.
    """
    out = []
    for nk, mult in necklace_multiplicities(o):
        info = fundamental_period(nk)
        in_period = sum(1 for c in info.period if c in b.descending)
        if in_period % 2 == 0:
            if info.repeats != 1:
                out.append((1, nk))
        elif info.repeats > 2:
            out.append((2, nk))
        if (in_period * info.repeats) % 2 == 1 and mult > 1:
            out.append((3, nk))
    out.sort(key=lambda v: (v[0], necklace_sort_key(v[1])))
    return tuple(out)


def is_invertible(o: Ornament, b: BlockSpec) -> bool:
    """True when ``o`` is the image of a (necessarily unique) block-ordered permutation."""
    if not is_compatible(o, b):
        raise ValueError("ornament is not compatible with the blocks")
    return not invertibility_violations(o, b)


def ensure_invertible(o: Ornament, b: BlockSpec) -> None:
    if not is_compatible(o, b):
        raise ValueError("ornament is not compatible with the blocks")
    violations = invertibility_violations(o, b)
    if violations:
        raise NotInvertible(*violations[0])


def is_aperiodic(o: Ornament, b: BlockSpec) -> bool:
    """Compatible, and every necklace is 1-repeating."""
    return is_compatible(o, b) and all(
        fundamental_period(nk).repeats == 1 for nk in o.necklaces
    )


def ornament_cycle_type(o: Ornament) -> CycleType:
    return CycleType.of(nk.length for nk in o.necklaces)


def format_necklace(nk: Necklace) -> str:
    return "(" + " ".join(str(c) for c in nk.colors) + ")"


def format_ornament(o: Ornament) -> str:
    return "".join(format_necklace(nk) for nk in o.necklaces)


def parse_ornament(text: str) -> Ornament:
    """Parse ``(1 2 2)(1 2)…``; necklace order and rotation are normalized away."""
    groups = re.findall(r"\(([^()]*)\)", text)
    leftover = re.sub(r"\([^()]*\)", "", text).strip()
    if leftover:
        raise ValueError(f"unexpected text outside parentheses: {leftover!r}")
    necklaces = []
    for body in groups:
        tokens = body.split()
        if not tokens:
            raise ValueError("empty necklace in ornament text")
        try:
            colors = tuple(int(t) for t in tokens)
        except ValueError:
            raise ValueError(f"non-integer color in necklace: {body!r}") from None
        necklaces.append(canonicalize_necklace(colors))
    return Ornament.of(necklaces)


def _is_canonical(t: tuple[int, ...]) -> bool:
    for r in range(1, len(t)):
        if t[r:] + t[:r] < t:
            return False
    return True


@lru_cache(maxsize=32)
def _pool_of_length(k: int, budget: tuple[int, ...], m: int) -> tuple[tuple[int, ...], ...]:
    """All canonical necklace color tuples of length ``m`` fitting the per-color budget."""
    found: list[tuple[int, ...]] = []
    seq = [0] * m
    counts = [0] * (k + 1)

    def rec(pos: int) -> None:
        for c in range(1, k + 1):
            if counts[c] == budget[c - 1]:
                continue
            if pos > 0 and c < seq[0]:
                continue  # a color below the first one rules out canonicality
            counts[c] += 1
            seq[pos] = c
            if pos + 1 == m:
                t = tuple(seq)
                if _is_canonical(t):
                    found.append(t)
            else:
                rec(pos + 1)
            counts[c] -= 1

    if m <= sum(budget):
        rec(0)
    found.sort()
    return tuple(found)


@lru_cache(maxsize=8)
def _full_pool(k: int, budget: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    for m in range(sum(budget), 0, -1):
        out.extend(_pool_of_length(k, budget, m))
    return tuple(out)


def _color_vector(t: tuple[int, ...], k: int) -> tuple[int, ...]:
    counts = [0] * k
    for c in t:
        counts[c - 1] += 1
    return tuple(counts)


def _ornament_key(o: Ornament) -> tuple:
    return tuple(necklace_sort_key(nk) for nk in o.necklaces)


@lru_cache(maxsize=4)
def _compatible_ornaments(lengths: tuple[int, ...]) -> tuple[Ornament, ...]:
    """Every ornament whose color counts equal ``lengths``, in canonical order."""
    k = len(lengths)
    n = sum(lengths)
    pool = _full_pool(k, lengths)
    vectors = [_color_vector(t, k) for t in pool]
    lens = [len(t) for t in pool]
    # first pool index whose necklace still fits in a remaining vertex total
    first_fit = [0] * (n + 1)
    for total in range(n + 1):
        first_fit[total] = bisect_left_desc(lens, total)
    support = [0] * (len(pool) + 1)
    for idx in range(len(pool) - 1, -1, -1):
        mask = support[idx + 1]
        for c in pool[idx]:
            mask |= 1 << (c - 1)
        support[idx] = mask

    remaining = list(lengths)
    acc: list[tuple[int, ...]] = []
    results: list[Ornament] = []

    def rec(idx: int, total_left: int) -> None:
        # recursion depth is the number of chosen necklaces; skipped
        # candidates advance idx iteratively
        if total_left == 0:
            results.append(Ornament(tuple(Necklace(t) for t in acc)))
            return
        idx = max(idx, first_fit[total_left])
        need = 0
        for c in range(k):
            if remaining[c]:
                need |= 1 << c
        while idx < len(pool):
            if need & ~support[idx]:
                return
            t, vec, m = pool[idx], vectors[idx], lens[idx]
            max_mult = total_left // m
            for c in range(k):
                if vec[c]:
                    max_mult = min(max_mult, remaining[c] // vec[c])
            used = 0
            while used < max_mult:
                for c in range(k):
                    remaining[c] -= vec[c]
                acc.append(t)
                used += 1
                rec(idx + 1, total_left - used * m)
            if used:
                for c in range(k):
                    remaining[c] += vec[c] * used
                del acc[-used:]
            idx += 1

    rec(0, n)
    results.sort(key=_ornament_key)
    return tuple(results)


def bisect_left_desc(lens: list[int], total: int) -> int:
    """First index of a non-increasing length list whose entry is <= total."""
    lo, hi = 0, len(lens)
    while lo < hi:
        mid = (lo + hi) // 2
        if lens[mid] > total:
            lo = mid + 1
        else:
            hi = mid
    return lo


PREDICATES = ("all", "invertible", "aperiodic")


def _passes(o: Ornament, b: BlockSpec, predicate: str) -> bool:
    if predicate == "all":
        return True
    if predicate == "invertible":
        return not invertibility_violations(o, b)
    return all(fundamental_period(nk).repeats == 1 for nk in o.necklaces)


def _check_predicate(predicate: str) -> None:
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; use one of {', '.join(PREDICATES)}")


def enumerate_ornaments(b: BlockSpec, predicate: str = "all", limit: int = 10) -> Iterator[Ornament]:
    """Yield every compatible ornament satisfying ``predicate``, in canonical order.

    Predicates: ``all`` (just compatibility), ``invertible`` (images of
    block-ordered permutations), ``aperiodic`` (every necklace 1-repeating).
    """
    if b.n > limit:
        raise LimitExceeded(f"n={b.n} exceeds enumeration limit {limit}")
    _check_predicate(predicate)
    for o in _compatible_ornaments(b.lengths):
        if _passes(o, b, predicate):
            yield o


def ornaments_with_cycle_type(
    b: BlockSpec, parts: Iterable[int], predicate: str = "all"
) -> Iterator[Ornament]:
    """Compatible ornaments whose necklace lengths equal ``parts`` (a partition of n).

    Restricting the necklace lengths up front keeps the search tractable far
    beyond what full ornament enumeration allows.
    """
    parts = tuple(sorted(parts, reverse=True))
    if sum(parts) != b.n:
        raise ValueError(f"cycle type {parts} does not sum to the block total {b.n}")
    _check_predicate(predicate)
    k = b.k
    pools = {m: _pool_of_length(k, b.lengths, m) for m in set(parts)}
    vectors = {m: [_color_vector(t, k) for t in pools[m]] for m in pools}
    remaining = list(b.lengths)
    chosen: list[tuple[int, ...]] = []
    results: list[Ornament] = []

    def rec(i: int, min_idx: int) -> None:
        if i == len(parts):
            results.append(Ornament(tuple(Necklace(t) for t in chosen)))
            return
        m = parts[i]
        start = min_idx if i > 0 and parts[i - 1] == m else 0
        pool = pools[m]
        for idx in range(start, len(pool)):
            vec = vectors[m][idx]
            if any(remaining[c] < vec[c] for c in range(k)):
                continue
            for c in range(k):
                remaining[c] -= vec[c]
            chosen.append(pool[idx])
            rec(i + 1, idx)
            chosen.pop()
            for c in range(k):
                remaining[c] += vec[c]

    rec(0, 0)
    results.sort(key=_ornament_key)
    for o in results:
        if _passes(o, b, predicate):
            yield o
