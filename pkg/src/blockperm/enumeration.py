"""Exact counting of block-ordered permutations by several independent methods.

Derangement counts come from an inclusion-exclusion sum and, separately, from
a coefficient of a truncated multivariate series; counts by cycle type come
from enumerating invertible ornaments; involution counts from filtering the
involutions of the symmetric group.  Everything uses exact integer (or
rational) arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator

from .core import (
    BlockSpec,
    CycleType,
    LimitExceeded,
    complement_applicable,
    cycle_type,
    enumerate_block_ordered,
)
from .ornament import enumerate_ornaments, ornament_cycle_type, ornaments_with_cycle_type

__all__ = [
    "multinomial",
    "TruncatedSeries",
    "count_derangements_pie",
    "count_derangements_gf",
    "count_derangements_brute",
    "count_by_cycle_type",
    "count_by_cycle_type_brute",
    "cycle_type_census",
    "permute_blocks",
    "SymmetryCheck",
    "verify_block_symmetry",
    "ComplementCheck",
    "verify_complement",
    "count_involutions",
    "derangement_number",
    "FixedPointPolynomial",
    "fixed_point_polynomial",
    "derangements_fixed_point_formula",
    "compositions",
    "partitions",
]


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(part!); empty input gives 1."""
    parts = tuple(parts)
    if any(x < 0 for x in parts):
        raise ValueError("multinomial parts must be non-negative")
    return factorial(sum(parts)) // prod(factorial(x) for x in parts)


def count_derangements_pie(b: BlockSpec) -> int:
    """Derangement count by inclusion-exclusion over removed fixed points.

    Sum over 0 <= b_m <= l_m of (-1)^(sum b) * multinomial(a - b), where
    l_m = a_m for descending blocks and 1 for ascending ones.
    """
    lims = [a if b.is_descending(i) else 1 for i, a in enumerate(b.lengths, start=1)]
    total = 0
    for drops in product(*(range(l + 1) for l in lims)):
        sign = -1 if sum(drops) % 2 else 1
        total += sign * multinomial(a - d for a, d in zip(b.lengths, drops))
    return total


@dataclass
class TruncatedSeries:
    """Multivariate polynomial with exponents capped per variable.

    Arithmetic silently drops any term whose exponent exceeds the cap in some
    variable, which is sound when only capped coefficients are read off.
    """

    caps: tuple[int, ...]
    coeffs: dict[tuple[int, ...], int]

    @classmethod
    def geometric_all(cls, caps: tuple[int, ...]) -> "TruncatedSeries":
        """Truncation of 1 / (1 - x_1 - ... - x_k)."""
        coeffs = {}
        for expo in product(*(range(c + 1) for c in caps)):
            coeffs[expo] = multinomial(expo)
        return cls(caps, coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.caps != other.caps:
            raise ValueError("mismatched variable caps")
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                if any(e > cap for e, cap in zip(expo, self.caps)):
                    continue
                out[expo] = out.get(expo, 0) + c1 * c2
        return TruncatedSeries(self.caps, out)

    def coefficient(self, expo: Iterable[int]) -> int:
        return self.coeffs.get(tuple(expo), 0)


def count_derangements_gf(b: BlockSpec) -> int:
    """Derangement count as a series coefficient.

    Coefficient of x_1^a_1 ... x_k^a_k in
    (prod over ascending i of (1 - x_i)) / ((1 - sum x_i) * prod over
    descending i of (1 + x_i)), computed with truncated series arithmetic.
    """
    caps = b.lengths
    series = TruncatedSeries.geometric_all(caps)
    for i in range(1, b.k + 1):
        terms: dict[tuple[int, ...], int] = {}
        top = caps[i - 1] if b.is_descending(i) else 1
        for j in range(top + 1):
            expo = tuple(j if idx == i - 1 else 0 for idx in range(b.k))
            terms[expo] = -1 if j % 2 else 1
        series = series * TruncatedSeries(caps, terms)
    return series.coefficient(caps)


def count_derangements_brute(b: BlockSpec, limit: int = 12) -> int:
    """Oracle: filter the exhaustive block-ordered stream for derangements."""
    return sum(1 for p in enumerate_block_ordered(b, limit) if p.is_derangement())


@lru_cache(maxsize=None)
def _count_by_type(lengths: tuple[int, ...], desc: tuple[int, ...], parts: tuple[int, ...]) -> int:
    b = BlockSpec(lengths, frozenset(desc))
    return sum(1 for _ in ornaments_with_cycle_type(b, parts, "invertible"))


def count_by_cycle_type(b: BlockSpec, t: CycleType, limit: int = 18) -> int:
    """Number of block-ordered permutations with cycle type ``t``.

    Counted as invertible ornaments whose necklace lengths realize ``t`` —
    tractable well past the range of exhaustive permutation filtering.
    """
    if t.n != b.n:
        raise ValueError(f"cycle type sums to {t.n}, blocks sum to {b.n}")
    if b.n > limit:
        raise LimitExceeded(f"n={b.n} exceeds cycle-type counting limit {limit}")
    return _count_by_type(b.lengths, tuple(sorted(b.descending)), t.parts)


def count_by_cycle_type_brute(b: BlockSpec, t: CycleType, limit: int = 12) -> int:
    """Oracle: filter the exhaustive block-ordered stream by cycle type."""
    return sum(1 for p in enumerate_block_ordered(b, limit) if cycle_type(p) == t)


def cycle_type_census(b: BlockSpec, limit: int = 10) -> dict[tuple[int, ...], int]:
    """Cycle-type table: counts of invertible ornaments grouped by necklace lengths."""
    census: dict[tuple[int, ...], int] = {}
    for o in enumerate_ornaments(b, "invertible", limit):
        parts = ornament_cycle_type(o).parts
        census[parts] = census.get(parts, 0) + 1
    return census


def permute_blocks(b: BlockSpec, sigma: Iterable[int]) -> BlockSpec:
    """Relabel blocks so that new block j is old block sigma[j-1]."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, b.k + 1)):
        raise ValueError(f"sigma must be a permutation of 1..{b.k}")
    lengths = tuple(b.lengths[s - 1] for s in sigma)
    desc = frozenset(j for j, s in enumerate(sigma, start=1) if s in b.descending)
    return BlockSpec(lengths, desc)


@dataclass(frozen=True)
class SymmetryCheck:
    left: int
    right: int
    equal: bool


def verify_block_symmetry(
    b: BlockSpec, sigma: Iterable[int], t: CycleType, limit: int = 18
) -> SymmetryCheck:
    """Compare the cycle-type count before and after relabeling the blocks by sigma."""
    left = count_by_cycle_type(b, t, limit)
    right = count_by_cycle_type(permute_blocks(b, sigma), t, limit)
    return SymmetryCheck(left, right, left == right)


@dataclass(frozen=True)
class ComplementCheck:
    applicable: bool
    left: int
    right: int
    equal: bool


def verify_complement(b: BlockSpec, t: CycleType, limit: int = 18) -> ComplementCheck:
    """Compare cycle-type counts for the descending set and its complement.

    Equality is guaranteed only when ``t`` has distinct odd parts and no part
    equal to 2 mod 4 (the ``applicable`` flag); both counts are returned
    regardless.
    """
    left = count_by_cycle_type(b, t, limit)
    right = count_by_cycle_type(b.complement(), t, limit)
    return ComplementCheck(complement_applicable(t), left, right, left == right)


@lru_cache(maxsize=None)
def _involutions(n: int) -> tuple[tuple[int, ...], ...]:
    images = [0] * (n + 1)
    out: list[tuple[int, ...]] = []

    def rec(i: int) -> None:
        while i <= n and images[i]:
            i += 1
        if i > n:
            out.append(tuple(images[1:]))
            return
        images[i] = i
        rec(i + 1)
        images[i] = 0
        for j in range(i + 1, n + 1):
            if not images[j]:
                images[i], images[j] = j, i
                rec(i + 1)
                images[i] = images[j] = 0

    rec(1)
    return tuple(out)


@lru_cache(maxsize=None)
def _involution_block_patterns(lengths: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Per involution of S_n: bitmasks of blocks it ascends in / descends in."""
    bounds = [0]
    for a in lengths:
        bounds.append(bounds[-1] + a)
    n = bounds[-1]
    patterns = []
    for img in _involutions(n):
        asc_mask = desc_mask = 0
        for bi in range(len(lengths)):
            lo, hi = bounds[bi], bounds[bi + 1]
            if all(img[i] < img[i + 1] for i in range(lo, hi - 1)):
                asc_mask |= 1 << bi
            if all(img[i] > img[i + 1] for i in range(lo, hi - 1)):
                desc_mask |= 1 << bi
        patterns.append((asc_mask, desc_mask))
    return tuple(patterns)


def count_involutions(b: BlockSpec, limit: int = 12) -> int:
    """Number of block-ordered involutions, by filtering the involutions of S_n."""
    if b.n > limit:
        raise LimitExceeded(f"n={b.n} exceeds involution counting limit {limit}")
    patterns = _involution_block_patterns(b.lengths)
    s_mask = sum(1 << (i - 1) for i in b.descending)
    full = (1 << b.k) - 1
    return sum(
        1
        for asc, desc in patterns
        if not (s_mask & ~desc) and not ((full ^ s_mask) & ~asc)
    )


@lru_cache(maxsize=None)
def derangement_number(m: int) -> int:
    if m < 0:
        raise ValueError("negative size")
    if m == 0:
        return 1
    if m == 1:
        return 0
    return (m - 1) * (derangement_number(m - 1) + derangement_number(m - 2))


@dataclass(frozen=True)
class FixedPointPolynomial:
    """Coefficient j counts the permutations of S_n with exactly j fixed points."""

    size: int
    coefficients: tuple[int, ...]

    def evaluate(self, point):
        total, power = 0, 1
        for c in self.coefficients:
            total += c * power
            power = power * point
        return total


def fixed_point_polynomial(n: int) -> FixedPointPolynomial:
    if n < 0:
        raise ValueError("negative size")
    coeffs = tuple(comb(n, j) * derangement_number(n - j) for j in range(n + 1))
    return FixedPointPolynomial(n, coeffs)


def derangements_fixed_point_formula(lengths: Iterable[int], point) -> int:
    """All-descending derangement count via the fixed-point generating polynomial.

    Evaluates, at the given rational point, the alternating sum over per-block
    intersection sizes t_i of prod C(a_i, t_i) * f(n - sum t) * prod f(t_i),
    divided by prod a_i!.  The value is independent of the evaluation point;
    comparing a few points certifies the underlying polynomial identity.
    """
    lengths = tuple(lengths)
    n = sum(lengths)
    lam = Fraction(point)
    f = [fixed_point_polynomial(m).evaluate(lam) for m in range(n + 1)]
    total = Fraction(0)
    for sizes in product(*(range(a + 1) for a in lengths)):
        s = sum(sizes)
        term = Fraction(-1 if s % 2 else 1)
        for a, t in zip(lengths, sizes):
            term *= comb(a, t)
        term *= f[n - s]
        for t in sizes:
            term *= f[t]
        total += term
    total /= prod(factorial(a) for a in lengths)
    if total.denominator != 1:
        raise ArithmeticError("fixed-point formula did not divide exactly")
    return int(total)


def compositions(n: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to ``n``."""
    cap = n if max_parts is None else max_parts

    def rec(rest: int, left: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if left == 0:
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first, left - 1):
                yield (first,) + tail

    return rec(n, cap)


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All non-increasing tuples of positive integers summing to ``n``."""
    if n == 0:
        yield ()
        return
    top = min(n, n if max_part is None else max_part)
    for first in range(top, 0, -1):
        for tail in partitions(n - first, first):
            yield (first,) + tail
