"""Digraph dicoloring toolkit.

Exact desk-scale oracles for the dichromatic and acyclic numbers,
promise-based approximate coloring (2- and ell-dicolorable inputs),
palette schemes for dense 2-dicolorable and C3-free digraphs built on a
mixed-path decomposition, and a randomized lexicographic product
generator with a consistency audit.
"""

from .graphs import (
    CycleCertificate,
    Digraph,
    UndirectedGraph,
    arc_neighborhood,
    digon_saturation,
    induced,
    is_acyclic,
    make_digraph,
    make_graph,
    neighborhoods,
    sccs,
    underlying_and_predicates,
)
from .oracles import (
    AcyclicSetWitness,
    Dicoloring,
    InstanceTooLargeError,
    chromatic_and_alpha,
    dichromatic_number,
    independence_number_digraph,
    is_k_dicolorable,
    max_acyclic_set,
    verify_dicoloring,
)
from .decompose import (
    PaletteBudget,
    PaletteTooSmallError,
    PathDecomposition,
    Step,
    VertexChain,
    backedge_graph,
    build_path_decomposition,
    color_via_backedge,
    combine_palettes,
    degeneracy_color,
    mixed_shortest_path,
)
from .approx import (
    NotColorableCertificate,
    PerSccFailure,
    color_per_scc,
    dicolor_ell,
    dicolor_two,
    ell_color_bound,
    find_low_vertex,
    two_color_bound,
)
from .dense import (
    HeavyEdgeReport,
    IndependencePromiseError,
    LightSplit,
    NotTwoDicolorableError,
    OddHeavySplitCertificate,
    dense_bound,
    dicolor_light_dense,
    dicolor_two_dense,
    find_st_acyclic_union,
    is_light,
    light_part_bound,
    saturate_heavy_nonarcs,
    split_light,
)
from .c3free import (
    GoodPair,
    SemiKernel,
    alpha2_witness,
    c3free_bound,
    dicolor_c3free,
    find_good_pair,
    saturate_c3free,
    semi_kernel,
)
from .products import (
    EtaAuditReport,
    ProductSpec,
    ProductVertexMap,
    eta_audit,
    k_fold_product,
    orient_transitive,
    random_lex_product,
    undirected_lex_product,
)
from .generators import gen_c3free_blowup, gen_planted, gen_tournament

__all__ = [name for name in dir() if not name.startswith("_")]
