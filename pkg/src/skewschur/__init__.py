"""Skew Schur functions: Littlewood-Richardson expansions, overlap invariants
and necessary conditions for Schur-positivity and support containment."""

from .partitions import (
    Partition,
    contains,
    dominates,
    list_partitions,
    make_partition,
    parse_partition,
    transpose,
    union,
)
from .positivity import (
    ConditionReport,
    ScreenVerdict,
    difference,
    is_schur_positive,
    necessary_condition_report,
    overlap_screen,
    product_tails_check,
    support_contains,
)
from .shapes import (
    OverlapProfile,
    SkewShape,
    col_lengths,
    cols_l,
    enumerate_skew_shapes,
    make_skew,
    overlap,
    overlap_profile,
    parse_shape,
    rects,
    row_lengths,
    rows_k,
    star_product,
    transpose_shape,
    trim,
    trim_power,
)
from .tableaux import (
    LRFilling,
    SchurExpansion,
    SignedExpansion,
    enumerate_lr_fillings,
    hybrid_filling,
    is_lattice,
    least_dominant_filling,
    lr_expand,
    most_dominant_filling,
    reverse_reading_word,
    support,
)

__version__ = "0.1.0"
