"""hoffgraph: spectral graph toolkit built around Hoffman graphs.

Finite simple graphs with regularity classification and graph6 interchange;
dense symmetric spectra, equitable partitions and quotient matrices; Hoffman
graphs (slim/fat labelings) with special matrices, named families and
fat-vertex clique expansions; quasi-clique decompositions of large maximal
cliques with the associated Hoffman graph; and verifiers for the
smallest-eigenvalue bound theorems these objects support.
"""

from .graphs import (
    Graph,
    RegularityProfile,
    build_graph,
    complement,
    complete,
    complete_multipartite,
    contains_induced,
    cycle,
    disjoint_union,
    induced_embedding,
    induced_subgraph,
    is_connected,
    k_tilde,
    named_graph,
    petersen,
    regularity_profile,
    rook_3x3,
    star,
    triangular_5,
)
from .graph6 import (
    Graph6Error,
    graph6_decode,
    graph6_encode,
    read_graph6_lines,
    write_graph6_lines,
)
from .spectral import (
    MARGIN_GUARD,
    SymmetricSpectrum,
    eigenvalues,
    lambda_max,
    lambda_min,
    quotient_matrix,
)
from .hoffman import (
    ExpansionSearch,
    HoffmanCatalogEntry,
    HoffmanConditionError,
    HoffmanGraph,
    build_hoffman,
    catalog,
    contains_induced_hoffman,
    expand,
    hoffman_from_fat,
    hoffman_from_text,
    hoffman_to_text,
    induced_hoffman,
    induced_hoffman_embedding,
    lambda_min_hoffman,
    minimal_expansion_order,
    special_matrix,
)
from .quasiclique import (
    QuasiCliqueError,
    QuasiCliqueSystem,
    associated_hoffman_graph,
    maximal_cliques,
    pair_related,
    quasi_clique_system,
)
from .verifier import (
    Claim1Report,
    ForbiddenFamilyReport,
    IsolatedVertexConeReport,
    NeumaierReport,
    VerificationReport,
    c_lambda_estimate,
    claim1_diagnostics,
    claim2_check,
    corpus_graphs,
    corpus_run,
    forbidden_family_check,
    lemma_isolated_vertex_check,
    m_prime,
    neumaier_check,
    ramsey_upper,
    t_prime,
    theorem5_check,
)

__version__ = "0.1.0"
