"""Weighted graph expansion from Laplacian eigenvectors, with mechanical
verification of the nodal/expansion theorem and its proof steps."""

from .graph import (
    Graph,
    GraphError,
    InducedSubgraph,
    SignSupport,
    build_graph,
    connected_components,
    induced_subgraph,
    is_connected,
    laplacian,
    sign_support,
    weights_from_eigenvector,
)
from .spectral import (
    EigenpairSelection,
    SpectralDecomposition,
    eigendecompose,
    select_eigenpair,
    spectral_gap_c,
)
from .expansion import (
    CutValue,
    ExpanderVerdict,
    PartitionCertificate,
    find_partition,
    is_expander,
    max_partitionable,
    phi,
    sweep_cut,
)
from .certificate import (
    CheckRecord,
    ProofObjects,
    TheoremReport,
    build_C,
    build_proof_objects,
    check_B_sign_pattern,
    check_Bz_zero,
    check_C_diagonal,
    check_CminusB_psd,
    check_interlacing,
    check_lambda_max_C,
    class_expansions,
    verify_corollary1,
    verify_prop_sum,
    verify_theorem1,
)
from .generators import (
    gen_complete,
    gen_cycle,
    gen_expander_path_expander,
    gen_gnp,
    gen_path,
    gen_random_regular,
)

__version__ = "0.1.0"
