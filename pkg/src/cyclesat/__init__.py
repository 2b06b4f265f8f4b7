"""cyclesat: even-cycle-saturated graph families and their certification.

Library layout:
  graph       labeled graph model, class orbits
  codecs      graph6 and labeled JSON serialization
  builder     the gadget H(k), the family G_r(k), duplicate extensions
  paths       exact-length search kernels, gadget path templates, core paths
  saturation  property certification and the constructive witness builder
  satsearch   exhaustive tiny-n saturation-number oracle
  cli         command-line front end
"""

from .builder import (
    BaseCycle,
    BlowupSpec,
    base_cycle,
    build_G,
    build_H,
    collapse_map,
    collapse_skeleton,
    extend_with_duplicates,
)
from .codecs import decode, encode, from_graph6, to_graph6
from .errors import (
    AdjacentEndpoints,
    BudgetExhausted,
    ConstructionGap,
    CycleSatError,
    DuplicateLabel,
    InvalidEdge,
    InvalidVertex,
    LemmaOutOfRange,
    MissingLabel,
    NoSaturatedGraph,
    NotCoreEligible,
    NotFree,
    ParameterBoundViolated,
    ParseError,
    SearchTooLarge,
    UnsupportedK,
    UnsupportedR,
)
from .graph import (
    GraphParams,
    LabeledGraph,
    OrbitPartition,
    VertexLabel,
    class_orbits,
    induced_subgraph,
    make_graph,
)
from .paths import (
    DEFAULT_BUDGET,
    Budget,
    LengthSets,
    PathWitness,
    achievable_path_lengths,
    core_paths,
    exists_cycle_of_length,
    exists_path_of_length,
    is_bipartite,
    lemma_path,
    odd_girth,
)
from .satsearch import (
    SearchResult,
    count_copies,
    is_saturated,
    matches_clique_plus_independent,
    min_sat_copies,
    min_sat_edges,
    named_graph,
)
from .saturation import (
    CertificationReport,
    SaturationCheck,
    certify,
    count_cycles,
    verify_free,
    verify_saturated,
    witness_path,
)

__version__ = "0.1.0"
