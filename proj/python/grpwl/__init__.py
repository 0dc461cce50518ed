"""Python access to the grpwl C++ core."""

from ._grpwl import (
    Graph,
    Group,
    GrpwlError,
    abelian_invariants,
    acceptance_tags,
    build_graph,
    build_group,
    canonical_digest,
    cfi,
    exhaustive_spoiler_wins,
    family_games,
    from_table,
    isomorphic,
    mekler_group,
    mekler_order_exponent,
    parse,
    run_acceptance,
    wl_classes,
    wl_compare,
)

__all__ = [
    "Graph",
    "Group",
    "GrpwlError",
    "abelian_invariants",
    "acceptance_tags",
    "build_graph",
    "build_group",
    "canonical_digest",
    "cfi",
    "exhaustive_spoiler_wins",
    "family_games",
    "from_table",
    "isomorphic",
    "mekler_group",
    "mekler_order_exponent",
    "parse",
    "run_acceptance",
    "wl_classes",
    "wl_compare",
]
