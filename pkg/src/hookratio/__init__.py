"""Exact integrality analysis for ratios of hook products over integer
partitions: core/quotient decompositions, the counts signature criterion
with explicit witness constructions, and the complete height 1
classification."""

__version__ = "0.1.0"

from .height1 import (
    Height1ContradictionError,
    PeriodSets,
    SumsetReport,
    decide_height1,
    find_hook_witness,
    is_canonical_exception,
    period_sets,
    sumset,
)
from .integral import (
    EXIT_CODES,
    STATUS_FAILS,
    STATUS_INTEGRAL,
    STATUS_UNKNOWN,
    FactoredRatio,
    Verdict,
    Witness,
    check_divisor_family,
    check_multinomial,
    construct_failing_lambda,
    counts_signature,
    decide,
    extract_failing_mu,
    find_failing_mu,
    ratio_factored,
    ratio_valuation,
)
from .littlewood import (
    CoreTower,
    LittlewoodDecomposition,
    QuotientTower,
    cells_with_exact_valuation,
    compose,
    core_tower,
    decompose,
    hook_count_divisible,
    is_p_core,
    iter_tower_levels,
    p_core,
    quotient_tower,
    valuation_hook_product,
)
from .partition import (
    BoundarySequence,
    Cell,
    Partition,
    construct_hook_partition,
    dimension,
    enumerate_partitions,
    format_partition,
    from_boundary,
    hook_length,
    hook_multiset,
    parse_partition,
    render_hook_diagram,
    restricted_hooks,
    to_boundary,
)
from .ratio import (
    FTable,
    RatioParams,
    bober_families,
    build_ftable,
    check_size_bound,
    f_value,
    g_value,
    landau_one_row_check,
    phi_bijection,
)

__all__ = [
    "BoundarySequence",
    "Cell",
    "CoreTower",
    "EXIT_CODES",
    "FTable",
    "FactoredRatio",
    "Height1ContradictionError",
    "LittlewoodDecomposition",
    "Partition",
    "PeriodSets",
    "QuotientTower",
    "RatioParams",
    "STATUS_FAILS",
    "STATUS_INTEGRAL",
    "STATUS_UNKNOWN",
    "SumsetReport",
    "Verdict",
    "Witness",
    "bober_families",
    "build_ftable",
    "cells_with_exact_valuation",
    "check_divisor_family",
    "check_multinomial",
    "check_size_bound",
    "compose",
    "construct_failing_lambda",
    "construct_hook_partition",
    "core_tower",
    "counts_signature",
    "decide",
    "decide_height1",
    "decompose",
    "dimension",
    "enumerate_partitions",
    "extract_failing_mu",
    "f_value",
    "find_failing_mu",
    "find_hook_witness",
    "format_partition",
    "from_boundary",
    "g_value",
    "hook_count_divisible",
    "hook_length",
    "hook_multiset",
    "is_canonical_exception",
    "is_p_core",
    "iter_tower_levels",
    "landau_one_row_check",
    "p_core",
    "parse_partition",
    "period_sets",
    "phi_bijection",
    "quotient_tower",
    "ratio_factored",
    "ratio_valuation",
    "render_hook_diagram",
    "restricted_hooks",
    "sumset",
    "to_boundary",
    "valuation_hook_product",
]
