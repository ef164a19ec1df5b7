"""indtopo: independence complexes of graphs, discrete Morse matchings,
exact reduced homology, and symbolic wedge-of-spheres reductions."""

from .complexes import (
    DEFAULT_FACE_BUDGET,
    FaceBudgetError,
    FaceWindow,
    SimplicialComplex,
    euler_characteristic_reduced,
    faces_in_window,
    from_facets,
    independence_complex,
    independence_facets,
    is_cone,
    link,
    star,
    star_cluster,
)
from .families import FAMILIES, FamilySpec, build_graph, random_graph
from .graphs import (
    Graph,
    add_edge,
    add_loop,
    categorical_product,
    closed_neighborhood,
    closed_neighborhood_set,
    complete,
    cycle,
    cycle_ladder,
    delete_vertices,
    disjoint_union,
    generalized_mycielskian,
    induced_subgraph,
    is_simplicial_vertex,
    ladder_replace_crossing,
    ladder_replace_triangle,
    load_graph,
    looped_path,
    neighborhood,
    path,
    save_graph,
    tower_gadget,
)
from .homology import (
    BettiTable,
    Boundary,
    SmithNormalForm,
    betti_reduced,
    betti_window,
    boundary_matrix,
    gf2_rank,
    smith_normal_form,
)
from .homotopy import (
    HomotopyType,
    Prediction,
    Stuck,
    edge_add_if_cone,
    fold_reduce,
    join,
    link_delete_if_cone,
    predict,
    reduce,
    simplicial_split,
    suspend,
    wedge,
)
from .homotopy import wedge_all
from .morse import (
    Matching,
    MatchingError,
    critical_cells,
    element_matching,
    product_matching_order,
    verify_acyclic,
    wedge_conclusion,
)
from .verify import SUITES, VerificationReport, run_suites

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_FACE_BUDGET",
    "FaceBudgetError",
    "FaceWindow",
    "SimplicialComplex",
    "euler_characteristic_reduced",
    "faces_in_window",
    "from_facets",
    "independence_complex",
    "independence_facets",
    "is_cone",
    "link",
    "star",
    "star_cluster",
    "FAMILIES",
    "FamilySpec",
    "build_graph",
    "random_graph",
    "Graph",
    "add_edge",
    "add_loop",
    "categorical_product",
    "closed_neighborhood",
    "closed_neighborhood_set",
    "complete",
    "cycle",
    "cycle_ladder",
    "delete_vertices",
    "disjoint_union",
    "generalized_mycielskian",
    "induced_subgraph",
    "is_simplicial_vertex",
    "ladder_replace_crossing",
    "ladder_replace_triangle",
    "load_graph",
    "looped_path",
    "neighborhood",
    "path",
    "save_graph",
    "tower_gadget",
    "BettiTable",
    "Boundary",
    "SmithNormalForm",
    "betti_reduced",
    "betti_window",
    "boundary_matrix",
    "gf2_rank",
    "smith_normal_form",
    "HomotopyType",
    "Prediction",
    "Stuck",
    "edge_add_if_cone",
    "fold_reduce",
    "join",
    "link_delete_if_cone",
    "predict",
    "reduce",
    "simplicial_split",
    "suspend",
    "wedge",
    "wedge_all",
    "Matching",
    "MatchingError",
    "critical_cells",
    "element_matching",
    "product_matching_order",
    "verify_acyclic",
    "wedge_conclusion",
    "SUITES",
    "VerificationReport",
    "run_suites",
    "__version__",
]
