"""Finite groupoids: subgroupoids, quotients, series, the Exel semigroup and
partial actions. The compiled core lives in ``grpd._core``."""

from ._core import (
    GrpdError,
    Groupoid,
    action_counts,
    all_composition_series,
    check_axioms,
    composition_factors,
    cyclic_group,
    direct_product,
    disjoint_union,
    exel_normal_form,
    exel_semigroup,
    is_normal,
    isomorphic,
    load,
    pair_groupoid,
    parse,
    quotient,
    run_cli,
    subgroupoids,
    symmetric_group_3,
)

__all__ = [
    "GrpdError",
    "Groupoid",
    "action_counts",
    "all_composition_series",
    "check_axioms",
    "composition_factors",
    "cyclic_group",
    "direct_product",
    "disjoint_union",
    "exel_normal_form",
    "exel_semigroup",
    "is_normal",
    "isomorphic",
    "load",
    "pair_groupoid",
    "parse",
    "quotient",
    "run_cli",
    "subgroupoids",
    "symmetric_group_3",
]
