"""Discrete Reeb sphere theorem machinery on finite simple graphs.

Graphs are immutable (:class:`Graph`); their Whitney complexes, Euler and
Wu characteristics, Betti numbers and Barycentric refinements live in
:mod:`reebsphere.complex`; certified recognition of contractible graphs,
spheres, balls and d-graphs in :mod:`reebsphere.recognition`; critical
points and indices of colorings in :mod:`reebsphere.morse`; and the
two-critical-point constructions on spheres and balls in
:mod:`reebsphere.reeb`.
"""

from .canon import CanonicalForm, are_isomorphic, canonical_form, canonical_graph
from .complex import (
    Coloring,
    barycentric_refinement,
    betti_numbers,
    boundary,
    boundary_simplices,
    cartesian_product,
    center_manifold,
    dimension,
    edge_refine,
    euler_characteristic,
    f_vector,
    level_surface,
    simplices,
    sublevel_set,
    superlevel_set,
    wu_characteristic,
)
from .errors import (
    BudgetExhausted,
    ConstructionBug,
    EmptyFactor,
    InvalidGraph,
    InvalidVertex,
    LevelOnVertex,
    NotABall,
    NotADGraph,
    NotAManifoldWithBoundary,
    NotASphere,
    NotLocallyInjective,
    NotRefinableEdge,
    PreconditionFailed,
    RecipeError,
    ReebError,
)
from .graph import (
    Graph,
    complement,
    connected_components,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
    join,
    relabel,
    unit_ball,
    unit_sphere,
)
from .morse import (
    CriticalReport,
    MorseClass,
    classify_center_manifold,
    classify_vertex,
    critical_reports,
    curvature_by_expectation,
    is_morse,
    poincare_hopf_index,
    random_coloring,
    symmetric_critical_points,
    symmetric_index,
    symmetric_index_by_center,
)
from .recipe import evaluate as from_recipe
from .recognition import (
    Answer,
    Recognizer,
    TopologyVerdict,
    is_ball,
    is_contractible,
    is_dgraph,
    is_dgraph_with_boundary,
    is_sphere,
)
from .reeb import (
    Foliation,
    ReebFunction,
    build_reeb_function,
    certify_sphere_via_reeb,
    cone_extension,
    foliate,
    reeb_function_on_ball,
    sublevel_ball,
)

__version__ = "0.1.0"
