"""Exhaustive cross-checking suites backing the ``verify`` CLI command.

Each suite sweeps every composition (and descending set) within the given
bounds and records every failing case with its full inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .bijection import forward, inverse
from .core import BlockSpec, CycleType, complement_applicable, format_permutation
from .core import enumerate_block_ordered
from .enumeration import (
    compositions,
    count_derangements_brute,
    count_derangements_gf,
    count_derangements_pie,
    count_involutions,
    cycle_type_census,
    derangements_fixed_point_formula,
    multinomial,
    partitions,
    verify_complement,
)
from .ornament import enumerate_ornaments

__all__ = [
    "SuiteResult",
    "roundtrip_suite",
    "image_suite",
    "counting_suite",
    "symmetry_suite",
    "complement_suite",
    "involution_suite",
    "fixed_point_suite",
    "aperiodic_count_suite",
    "run_all",
]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _descending_sets(k: int) -> Iterator[frozenset[int]]:
    for mask in range(1 << k):
        yield frozenset(i + 1 for i in range(k) if mask >> i & 1)


def _blockspecs(max_n: int, max_k: int | None) -> Iterator[BlockSpec]:
    for n in range(1, max_n + 1):
        for comp in compositions(n, max_k):
            for desc in _descending_sets(len(comp)):
                yield BlockSpec(comp, desc)


def _spec_label(b: BlockSpec) -> str:
    return f"blocks={','.join(map(str, b.lengths))} descending={{{','.join(map(str, sorted(b.descending)))}}}"


def roundtrip_suite(max_n: int = 6, max_k: int | None = 3) -> SuiteResult:
    """inverse(forward(p)) == p for every block-ordered permutation in range."""
    r = SuiteResult("roundtrip")
    for b in _blockspecs(max_n, max_k):
        for p in enumerate_block_ordered(b, limit=max_n):
            r.cases += 1
            q = inverse(forward(p, b), b)
            if q != p:
                r.failures.append(
                    f"{_spec_label(b)} p={format_permutation(p)} got={format_permutation(q)}"
                )
    return r


def image_suite(max_n: int = 6, max_k: int | None = 3) -> SuiteResult:
    """The forward image equals exactly the set of invertible ornaments."""
    r = SuiteResult("image")
    for b in _blockspecs(max_n, max_k):
        r.cases += 1
        images = {forward(p, b) for p in enumerate_block_ordered(b, limit=max_n)}
        predicted = set(enumerate_ornaments(b, "invertible", limit=max_n))
        if images != predicted:
            extra = len(images - predicted)
            missing = len(predicted - images)
            r.failures.append(
                f"{_spec_label(b)} image has {extra} unpredicted and misses {missing} ornaments"
            )
    return r


def counting_suite(max_n: int = 6, max_k: int | None = 3) -> SuiteResult:
    """Inclusion-exclusion, series coefficient, and brute force all agree."""
    r = SuiteResult("derangement-counts")
    for b in _blockspecs(max_n, max_k):
        r.cases += 1
        pie = count_derangements_pie(b)
        gf = count_derangements_gf(b)
        brute = count_derangements_brute(b, limit=max_n)
        if not pie == gf == brute:
            r.failures.append(f"{_spec_label(b)} pie={pie} gf={gf} brute={brute}")
    return r


def symmetry_suite(max_n: int = 6, max_k: int | None = None) -> SuiteResult:
    """Cycle-type tables are invariant under relabeling the blocks."""
    r = SuiteResult("block-symmetry")
    for n in range(1, max_n + 1):
        reference: dict[tuple, tuple[BlockSpec, dict]] = {}
        for comp in compositions(n, max_k):
            for desc in _descending_sets(len(comp)):
                b = BlockSpec(comp, desc)
                r.cases += 1
                census = cycle_type_census(b, limit=max_n)
                key = tuple(sorted((a, i in desc) for i, a in enumerate(comp, start=1)))
                if key in reference:
                    ref_b, ref_census = reference[key]
                    if census != ref_census:
                        r.failures.append(
                            f"{_spec_label(b)} table differs from {_spec_label(ref_b)}"
                        )
                else:
                    reference[key] = (b, census)
    return r


def complement_suite(max_n: int = 6, max_k: int | None = 3) -> SuiteResult:
    """Cycle-type counts agree under complementing the descending set.

    Checked for every cycle type with distinct odd parts and no part equal to
    2 mod 4.
    """
    r = SuiteResult("complement")
    for n in range(1, max_n + 1):
        types = [CycleType(p) for p in partitions(n)]
        applicable = [t for t in types if complement_applicable(t)]
        for comp in compositions(n, max_k):
            k = len(comp)
            for desc in _descending_sets(k):
                if sum(1 << i for i in desc) > sum(1 << i for i in range(1, k + 1) if i not in desc):
                    continue  # each S/complement pair once
                b = BlockSpec(comp, desc)
                for t in applicable:
                    r.cases += 1
                    check = verify_complement(b, t, limit=max_n)
                    if not check.equal:
                        r.failures.append(
                            f"{_spec_label(b)} type={t.parts} left={check.left} right={check.right}"
                        )
    return r


def involution_suite(max_n: int = 6, max_k: int | None = None) -> SuiteResult:
    """Involution counts agree under complementing the descending set."""
    r = SuiteResult("involution-complement")
    for b in _blockspecs(max_n, max_k):
        comp_mask = sum(1 << i for i in range(1, b.k + 1) if i not in b.descending)
        if sum(1 << i for i in b.descending) > comp_mask:
            continue
        r.cases += 1
        left = count_involutions(b, limit=max_n)
        right = count_involutions(b.complement(), limit=max_n)
        if left != right:
            r.failures.append(f"{_spec_label(b)} left={left} right={right}")
    return r


FIXED_POINT_SAMPLE = (0, 1, 2, Fraction(1, 2))


def fixed_point_suite(max_n: int = 6) -> SuiteResult:
    """The fixed-point formula is constant in its parameter and matches the count."""
    r = SuiteResult("fixed-point-formula")
    for n in range(1, max_n + 1):
        for comp in compositions(n):
            r.cases += 1
            expected = count_derangements_pie(BlockSpec(comp, range(1, len(comp) + 1)))
            values = [derangements_fixed_point_formula(comp, pt) for pt in FIXED_POINT_SAMPLE]
            if any(v != expected for v in values):
                r.failures.append(f"blocks={comp} expected={expected} got={values}")
    return r


def aperiodic_count_suite(max_n: int = 6) -> SuiteResult:
    """There are exactly multinomial(n; lengths) aperiodic compatible ornaments."""
    r = SuiteResult("aperiodic-count")
    for n in range(1, max_n + 1):
        for comp in compositions(n):
            r.cases += 1
            b = BlockSpec(comp)  # the predicate ignores the descending set
            got = sum(1 for _ in enumerate_ornaments(b, "aperiodic", limit=max_n))
            want = multinomial(comp)
            if got != want:
                r.failures.append(f"blocks={comp} got={got} want={want}")
    return r


def run_all(max_n: int = 6, max_k: int | None = 3) -> list[SuiteResult]:
    return [
        roundtrip_suite(max_n, max_k),
        image_suite(max_n, max_k),
        counting_suite(max_n, max_k),
        symmetry_suite(max_n, max_k),
        complement_suite(max_n, max_k),
        involution_suite(max_n, max_k),
        fixed_point_suite(max_n),
        aperiodic_count_suite(max_n),
    ]
