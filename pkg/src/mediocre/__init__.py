"""Comparison-counted exact and approximate selection with a closed-form cost model."""

from .approx import (
    A2Params,
    HyperpairConfig,
    a1_select,
    a2_las_vegas,
    a2_once,
    a2_params,
    hyperpair_select,
    yao_select,
)
from .core import (
    CountingComparator,
    Element,
    Instance,
    Rng,
    SelectionOutcome,
    generate_instance,
    is_mediocre,
    rank_of,
)
from .costmodel import (
    CostPoint,
    InstanceConstants,
    cost_point,
    curve,
    f,
    f_table,
    constants_table,
    g,
    hyper4_table,
    instance_constants,
    l_star,
    lower_bound,
    tables,
)
from .exact import (
    select_by_sort,
    select_floyd_rivest,
    select_mom,
    select_second_tournament,
)

__all__ = [
    "A2Params",
    "CostPoint",
    "CountingComparator",
    "Element",
    "HyperpairConfig",
    "Instance",
    "InstanceConstants",
    "Rng",
    "SelectionOutcome",
    "a1_select",
    "a2_las_vegas",
    "a2_once",
    "a2_params",
    "constants_table",
    "cost_point",
    "curve",
    "f",
    "f_table",
    "g",
    "generate_instance",
    "hyper4_table",
    "hyperpair_select",
    "instance_constants",
    "is_mediocre",
    "l_star",
    "lower_bound",
    "rank_of",
    "select_by_sort",
    "select_floyd_rivest",
    "select_mom",
    "select_second_tournament",
    "tables",
    "yao_select",
]
