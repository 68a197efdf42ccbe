"""Higher independence complexes of graphs: construction, shellability and
hypergraph chordality with machine-checkable certificates."""

from .graphs import (
    Graph,
    EliminationLayers,
    blocks,
    clique_shadow,
    connected_components,
    contains_induced,
    complete_graph,
    cycle_graph,
    diameter,
    elimination_layers,
    induced_subgraph,
    is_chordal,
    path_graph,
    simplicial_vertices,
)
from .families import CliquePath, FamilyFlags, classify_families, maximum_clique_path
from .hypergraphs import (
    Hypergraph,
    MinorSpec,
    contract_vertex,
    delete_vertex,
    enumerate_contractions,
    has_singleton,
    hyper_simplicial_vertices,
    make_hypergraph,
    minor,
)
from .conn import con_r, connected_subsets
from .complexes import (
    SimplicialComplex,
    deletion,
    full_simplex,
    ind_r_complex,
    independence_complex,
    is_r_independent,
    link,
)
from .shelling import (
    NOT_SHELLABLE,
    SHELLABLE,
    UNKNOWN,
    ShellingCertificate,
    ShellingDecision,
    brute_force_shellable,
    is_shellable,
    verify_shelling,
)
from .chordality import (
    NOT_W_CHORDAL,
    W_CHORDAL,
    BadMinorCertificate,
    ChordalityDecision,
    c_prime_minor_stream,
    every_contraction_simplicial,
    is_w_chordal,
    verify_bad_minor,
)
from .constructions import (
    CliquePartition,
    attach_star_cliques,
    clique_cycle,
    clique_path,
    clique_whisker,
    counterexample_Gt,
    random_family,
    she_higher_family,
    star_clique,
    t3_graph,
    whisker,
)

__version__ = "0.1.0"
