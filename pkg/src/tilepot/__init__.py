"""Flexible-tile self-assembly toolkit.

Models pots of k-armed tiles whose cohesive ends bond complementarily,
builds and solves their construction matrices exactly, enumerates every
complete complex at a given order, verifies pots against target graphs
under three progressively stricter scenarios, generates optimal pots for
wheel and cycle graphs, and re-derives minimal bond/tile counts by
exhaustive search.
"""

from .assembly import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExceeded,
    RealizationSet,
    RealizationWitness,
    ScenarioReport,
    TileInstancing,
    UnbalancedUsage,
    enumerate_at_order,
    enumerate_complexes,
    instantiate,
    iter_complexes,
    realizes,
    verify_scenario,
    witness_is_valid,
)
from .matrix import (
    ConstructionMatrix,
    MinOrderResult,
    SpectrumSolution,
    build_matrix,
    first_realizable_order,
    first_usage_vector,
    min_order,
    solve,
    unique_solution_order,
    usage_vectors,
)
from .multigraph import (
    DegreeStats,
    GraphFormatError,
    Multigraph,
    WheelStructure,
    canonical_form,
    canonical_key,
    complete,
    cycle,
    degree_stats,
    is_hamiltonian,
    iso_invariant,
    isomorphic,
    isomorphism,
    parse_graph,
    render_graph,
    wheel,
    wheel_structure,
)
from .search import (
    MinimaPair,
    MinimaResult,
    PruneFlags,
    SearchSpec,
    check_bounds,
    check_hierarchy,
    search_minima,
)
from .tiles import (
    CohesiveEnd,
    Pot,
    PotFormatError,
    Tile,
    cycle_pot_s3,
    parse_pot,
    render_pot,
    tile,
    tile_multiset_counter,
    wheel_pot_s12,
    wheel_pot_s3,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "Budget",
    "BudgetExceeded",
    "CohesiveEnd",
    "ConstructionMatrix",
    "DegreeStats",
    "GraphFormatError",
    "MinOrderResult",
    "MinimaPair",
    "MinimaResult",
    "Multigraph",
    "Pot",
    "PotFormatError",
    "PruneFlags",
    "RealizationSet",
    "RealizationWitness",
    "ScenarioReport",
    "SearchSpec",
    "SpectrumSolution",
    "Tile",
    "TileInstancing",
    "UnbalancedUsage",
    "WheelStructure",
    "build_matrix",
    "canonical_form",
    "canonical_key",
    "check_bounds",
    "check_hierarchy",
    "complete",
    "cycle",
    "cycle_pot_s3",
    "degree_stats",
    "enumerate_at_order",
    "enumerate_complexes",
    "first_realizable_order",
    "first_usage_vector",
    "instantiate",
    "is_hamiltonian",
    "iso_invariant",
    "isomorphic",
    "isomorphism",
    "iter_complexes",
    "min_order",
    "parse_graph",
    "parse_pot",
    "realizes",
    "render_graph",
    "render_pot",
    "search_minima",
    "solve",
    "tile",
    "tile_multiset_counter",
    "unique_solution_order",
    "usage_vectors",
    "verify_scenario",
    "wheel",
    "wheel_pot_s12",
    "wheel_pot_s3",
    "wheel_structure",
    "witness_is_valid",
]
