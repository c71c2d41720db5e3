"""Exact arithmetic on Conway topographs.

Binary quadratic form trees, Markov and Mordell triples with their
dual-number shadows, Pell solutions, and growth experiments on the
Euclid tree.  All tree generation is exact integer arithmetic; floating
point enters only when taking logarithms of exact integers.
"""

from .dual import DualInt, DualRat, analytic_lift
from .errors import (
    BadEuclidTriple,
    DegenerateImage,
    DepthLimit,
    InvalidTriple,
    NotAUnit,
    NotIndefinite,
    SquareDiscriminant,
    SquareInput,
    TopographError,
    ZeroValueEncountered,
)
from .euclid import (
    EUCLID_ROOT,
    EuclidTriple,
    LyapunovEstimate,
    PathSpec,
    euclid_path,
    euclid_tree,
    gl2_invariance_check,
    lyapunov_estimate,
    lyapunov_exact_periodic,
    principal_shadow_ratio,
    relative_shadow_growth,
    river_growth_exponent,
    topograph_growth_exponent,
    word_from_cf,
)
from .forms import (
    FaceTriple,
    QuadForm,
    RegionVector,
    RiverDescription,
    RiverEdge,
    TopographNode,
    ap_step,
    brute_force_two_squares,
    enumerate_topograph,
    find_river,
    jacobi_two_squares,
    region_vector,
    region_vectors,
    sign_change_edges,
    values_along_path,
)
from .markov import (
    MarkovTriple,
    ShadowMarkovTriple,
    fibonacci_branch_maxima,
    fibonacci_branch_shadow,
    markov_tree,
    shadow_markov_tree,
    shadow_vieta,
    vieta_markov,
)
from .mordell import (
    MordellTriple,
    PellContext,
    PellSolution,
    ShadowMordellTriple,
    mordell_triple,
    mordell_tree,
    pell_brute_force,
    pell_fundamental,
    principal_shadow,
    shadow_mordell_tree,
    shadow_vieta_mordell,
    special_orbit_shadow_tree,
    vieta_mordell,
)

__version__ = "0.1.0"

__all__ = [
    "DualInt", "DualRat", "analytic_lift",
    "QuadForm", "FaceTriple", "RegionVector", "TopographNode",
    "RiverDescription", "RiverEdge",
    "ap_step", "values_along_path", "region_vector", "region_vectors",
    "enumerate_topograph", "find_river", "sign_change_edges",
    "jacobi_two_squares", "brute_force_two_squares",
    "MarkovTriple", "ShadowMarkovTriple", "vieta_markov", "shadow_vieta",
    "markov_tree", "shadow_markov_tree",
    "fibonacci_branch_maxima", "fibonacci_branch_shadow",
    "PellSolution", "PellContext", "pell_fundamental", "pell_brute_force",
    "MordellTriple", "ShadowMordellTriple", "mordell_triple",
    "principal_shadow", "vieta_mordell", "shadow_vieta_mordell",
    "special_orbit_shadow_tree", "mordell_tree", "shadow_mordell_tree",
    "EuclidTriple", "EUCLID_ROOT", "PathSpec", "LyapunovEstimate",
    "euclid_path", "euclid_tree", "word_from_cf",
    "lyapunov_estimate", "lyapunov_exact_periodic", "gl2_invariance_check",
    "topograph_growth_exponent", "river_growth_exponent",
    "relative_shadow_growth", "principal_shadow_ratio",
    "TopographError", "NotAUnit", "DepthLimit", "NotIndefinite",
    "SquareDiscriminant", "ZeroValueEncountered", "InvalidTriple",
    "BadEuclidTriple", "SquareInput", "DegenerateImage",
]
