"""Exact cellular sheaf cohomology on finite simplicial complexes,
with sampling certificates for perfect reconstruction.

Everything runs over exact rationals; a dimension reported as zero is
zero, not small.  See the README for the JSON document format and the
command line interface.
"""

from .complexes import (
    SimplicialComplex,
    as_face,
    build_complex,
    complete_graph,
    cycle_graph,
    face_dim,
    incidence,
    is_subcomplex,
    path_graph,
    star_graph,
)
from .exactlin import (
    Matrix,
    Rational,
    RationalMatrix,
    SolveResult,
    block_diagonal,
    hstack,
    quotient_dimension,
    solve,
    solve_matrix,
    vstack,
)
from .sheaf import (
    Assignment,
    Sheaf,
    SheafMorphism,
    Verdict,
    apply_morphism,
    constant_sheaf,
    identity_morphism,
    is_section,
    restrict_base,
    restrict_to_subcomplex,
    validate_morphism,
    validate_sheaf,
    zero_morphism,
)
from .cohomology import (
    CochainSpace,
    CohomologyReport,
    coboundary,
    cochain_space,
    cohomology,
    induced_h0_map,
    section_from_vertex_values,
)
from .sampling import (
    AmbiguitySheaf,
    ObstructionReport,
    OversamplingReport,
    ReconstructionResult,
    SamplingCertificate,
    SamplingProblem,
    ambiguity_sheaf,
    make_sampling_sheaf,
    nyquist_check,
    obstruction_check,
    oversampling_check,
    polynomial_evaluation_problem,
    reconstruct,
    sample_section,
    sampling_from_subcomplex,
    subsheaf_vanishing_on,
)
from .plgraph import (
    CoverageReport,
    ExtrapolationCase,
    ExtrapolationSuite,
    PLSheaf,
    RedundancyReport,
    build_pl_sheaf,
    edge_distance,
    extrapolation_case_suite,
    max_edge_distance,
    pl_sampling_problem,
    pl_section,
    pl_vanishing_subsheaf,
    redundancy_dimension,
    unambiguous_check,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
