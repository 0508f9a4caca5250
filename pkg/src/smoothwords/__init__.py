"""Smooth words over two-letter alphabets.

Words, run-length derivation operators, smoothness checks, self-reading
generators, bispecial trees with factor-complexity accounting, and the
growth matrices and exponents attached to them.
"""

from .bispecial import (
    BispecialNode,
    ComplexityTable,
    GenerationStats,
    TreeComplexity,
    bispecial_multiplicity_sum,
    classify_short_bispecials,
    exact_complexity,
    generation_stats,
    generation_swap,
    is_bispecial,
    multiplicity,
    primitive,
    root_of,
    tree_complexity,
    tree_derived_complexity,
    tree_generation,
    FAMILIES,
)
from .derivation import (
    DerivabilityReport,
    cut_f,
    derivability,
    derivative_chain,
    derive_f,
    derive_huang,
    derive_r,
)
from .errors import (
    BoundViolationError,
    ConstructionError,
    DerivationError,
    InvalidFamilyError,
    NoConvergenceError,
    NotDerivableError,
    NotPrimitiveError,
    NotRDerivableError,
    ResourceCapError,
    SmoothWordsError,
)
from .generators import (
    SmoothStream,
    build_smooth_from_r,
    check_smooth_depth,
    coupled_pair_prefix,
    kappa_prefix,
)
from .smoothness import (
    EmbeddingWitness,
    FSmoothCertificate,
    embed_left,
    enumerate_f_smooth,
    f_smooth_count,
    is_cube_free,
    is_f_smooth,
    is_r_smooth,
    left_extensions,
    right_extensions,
)
from .spectral import (
    CountMatrix,
    ExponentReport,
    GrowthMatrices,
    build_matrices,
    dominant_eigenvalue,
    exponent_report,
    frequency_bound_exponent,
    frequency_delta,
    frequency_gamma,
    lambda_of,
    lower_bound_constants,
    max_length_growth_radius,
    minimal_length_sequence,
    single_term_lower_bounds,
    spectral_radius,
)
from .words import Alphabet, Parity, ParityCountVector, Run, RunFactorization, Word

__all__ = [
    "Alphabet",
    "BispecialNode",
    "BoundViolationError",
    "ComplexityTable",
    "ConstructionError",
    "CountMatrix",
    "DerivabilityReport",
    "DerivationError",
    "EmbeddingWitness",
    "ExponentReport",
    "FAMILIES",
    "FSmoothCertificate",
    "GenerationStats",
    "GrowthMatrices",
    "InvalidFamilyError",
    "NoConvergenceError",
    "NotDerivableError",
    "NotPrimitiveError",
    "NotRDerivableError",
    "Parity",
    "ParityCountVector",
    "ResourceCapError",
    "Run",
    "RunFactorization",
    "SmoothStream",
    "SmoothWordsError",
    "TreeComplexity",
    "Word",
    "bispecial_multiplicity_sum",
    "build_matrices",
    "build_smooth_from_r",
    "check_smooth_depth",
    "classify_short_bispecials",
    "coupled_pair_prefix",
    "cut_f",
    "derivability",
    "derivative_chain",
    "derive_f",
    "derive_huang",
    "derive_r",
    "dominant_eigenvalue",
    "embed_left",
    "enumerate_f_smooth",
    "exact_complexity",
    "exponent_report",
    "f_smooth_count",
    "frequency_bound_exponent",
    "frequency_delta",
    "frequency_gamma",
    "generation_stats",
    "generation_swap",
    "is_bispecial",
    "is_cube_free",
    "is_f_smooth",
    "is_r_smooth",
    "kappa_prefix",
    "lambda_of",
    "left_extensions",
    "lower_bound_constants",
    "max_length_growth_radius",
    "minimal_length_sequence",
    "multiplicity",
    "primitive",
    "right_extensions",
    "root_of",
    "single_term_lower_bounds",
    "spectral_radius",
    "tree_complexity",
    "tree_derived_complexity",
    "tree_generation",
    "__version__",
]

__version__ = "0.1.0"
