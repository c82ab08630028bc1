"""blockperm: block-monotone permutations, their necklace images, exact counts."""

from .core import (
    BlockSpec,
    Classification,
    CycleType,
    LimitExceeded,
    Permutation,
    classify,
    complement_applicable,
    cycle_decomposition,
    cycle_type,
    enumerate_block_ordered,
    format_cycles,
    format_permutation,
    parse_permutation,
)
from .ornament import (
    DescendingCounts,
    Necklace,
    NotInvertible,
    Ornament,
    PeriodInfo,
    canonicalize_necklace,
    descending_counts,
    enumerate_ornaments,
    format_necklace,
    format_ornament,
    fundamental_period,
    invertibility_violations,
    is_aperiodic,
    is_compatible,
    is_invertible,
    ornament_cycle_type,
    ornaments_with_cycle_type,
    parse_ornament,
)
from .bijection import (
    Orbit,
    Packet,
    SignedWalk,
    Template,
    VertexRef,
    build_template,
    compare_vertices,
    complement_transfer,
    forward,
    forward_with_labels,
    inverse,
    is_derangement_image,
    merge_duplicates,
    orbit_cycle_structure,
    pair_fixed_cycles,
    signed_walk,
    split_repeating,
)
from .enumeration import (
    ComplementCheck,
    FixedPointPolynomial,
    SymmetryCheck,
    TruncatedSeries,
    compositions,
    count_by_cycle_type,
    count_by_cycle_type_brute,
    count_derangements_brute,
    count_derangements_gf,
    count_derangements_pie,
    count_involutions,
    cycle_type_census,
    derangement_number,
    derangements_fixed_point_formula,
    fixed_point_polynomial,
    multinomial,
    partitions,
    permute_blocks,
    verify_block_symmetry,
    verify_complement,
)

__version__ = "0.1.0"
