"""geocage: mixed graphs of bounded geodecity.

Moore-style bounds, extremal families and fixtures, finite-group Cayley
machinery, and exhaustive search for smallest k-geodetic mixed graphs.
"""

from .analysis import (
    DistanceReport,
    ExcessDefectReport,
    GeodecityReport,
    defect_report,
    distance_report,
    excess_report,
    geodecity_report,
    nb_walk_counts,
    outlier_automorphism_check,
)
from .bounds import (
    BoundSpectrum,
    Chain,
    ChainDecomposition,
    MooreLevels,
    arrow_count,
    bosak_admissible,
    chain_decomposition,
    defect_lb_unit,
    defect_one_admissible,
    excess_lb_general,
    excess_lb_totally_regular,
    excess_one_admissible,
    excess_one_possible,
    moore_closed_form,
    moore_levels,
    moore_mixed,
    spectrum,
)
from .core import (
    DegreeProfile,
    MixedGraph,
    RegularityReport,
    build_graph,
    degree_profile,
    parse_mgf,
    regularity_report,
    to_dot,
    write_mgf,
)
from .families import (
    FixtureInfo,
    cycle,
    drop_arc_per_vertex,
    fixture,
    fixture_names,
    kautz_mixed,
    permutation_digraph,
    reduce_k,
    truncate_compose,
)
from .groups import (
    ConnectionSet,
    GroupTable,
    catalog,
    cayley_mixed,
    closure_from_generators,
    connection_set,
    connection_sets,
    generates,
    parse_group_table,
    preset,
    write_group_table,
)
from .search import (
    BUDGET_EXCEEDED,
    EXHAUSTED_NONE,
    FOUND,
    SearchConfig,
    SearchOutcome,
    SmallestResult,
    iso_distinct,
    search_cayley_group,
    search_exact,
    smallest_cayley,
    smallest_general,
)

__all__ = [
    "BUDGET_EXCEEDED",
    "BoundSpectrum",
    "Chain",
    "ChainDecomposition",
    "ConnectionSet",
    "DegreeProfile",
    "DistanceReport",
    "EXHAUSTED_NONE",
    "ExcessDefectReport",
    "FOUND",
    "FixtureInfo",
    "GeodecityReport",
    "GroupTable",
    "MixedGraph",
    "MooreLevels",
    "RegularityReport",
    "SearchConfig",
    "SearchOutcome",
    "SmallestResult",
    "arrow_count",
    "bosak_admissible",
    "build_graph",
    "catalog",
    "cayley_mixed",
    "chain_decomposition",
    "closure_from_generators",
    "connection_set",
    "connection_sets",
    "cycle",
    "defect_lb_unit",
    "defect_one_admissible",
    "defect_report",
    "degree_profile",
    "distance_report",
    "drop_arc_per_vertex",
    "excess_lb_general",
    "excess_lb_totally_regular",
    "excess_one_admissible",
    "excess_one_possible",
    "excess_report",
    "fixture",
    "fixture_names",
    "generates",
    "geodecity_report",
    "iso_distinct",
    "kautz_mixed",
    "moore_closed_form",
    "moore_levels",
    "moore_mixed",
    "nb_walk_counts",
    "outlier_automorphism_check",
    "parse_group_table",
    "parse_mgf",
    "permutation_digraph",
    "preset",
    "reduce_k",
    "regularity_report",
    "search_cayley_group",
    "search_exact",
    "smallest_cayley",
    "smallest_general",
    "spectrum",
    "to_dot",
    "truncate_compose",
    "write_group_table",
    "write_mgf",
]
