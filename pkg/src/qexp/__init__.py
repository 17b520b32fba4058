"""Exact exponential sums over singular binary quintic forms.

The normalized sum attached to a dual vector w is evaluated two independent
ways: a closed form driven by the catalecticant rank and the splitting type
of an apolar form (quintic.exp_sum), and a brute-force histogram over the
singular locus (oracle.exp_sum_oracle). The CLI cross-checks them and
recomputes a bundled reference dataset."""

from .apolar import (
    WaringType,
    apolar_space,
    cat_covariant,
    catalecticant_rank,
    ci_generators,
    minimal_generator,
    perp_space,
    waring_type,
)
from .factor import SplittingType, is_singular, quadratic_symbol, splitting_type
from .ff import Fp, is_prime, legendre, sqrt_mod
from .forms import (
    BinaryForm,
    DualForm,
    Matrix,
    catalecticant_matrix,
    disc_quadratic,
    multiply,
    pair,
    projective_points,
    rank_and_kernel,
    rref,
)
from .oracle import (
    BudgetExceededError,
    FiberCounts,
    OracleValue,
    ResidueProfile,
    ScanReport,
    conjecture_scan,
    exp_sum_oracle,
    fiber_counts,
    fiber_sums_over_apolar,
    n_w,
    singular_locus,
)
from .quintic import (
    ExpSumValue,
    NTildeCounts,
    apolar_square_quadrics,
    c_value,
    example_family,
    exp_sum,
    n_tilde_counts,
    sign_variant_discriminants,
)

__all__ = [
    "BinaryForm",
    "BudgetExceededError",
    "DualForm",
    "ExpSumValue",
    "FiberCounts",
    "Fp",
    "Matrix",
    "NTildeCounts",
    "OracleValue",
    "ResidueProfile",
    "ScanReport",
    "SplittingType",
    "WaringType",
    "apolar_space",
    "apolar_square_quadrics",
    "c_value",
    "cat_covariant",
    "catalecticant_matrix",
    "catalecticant_rank",
    "ci_generators",
    "conjecture_scan",
    "disc_quadratic",
    "example_family",
    "exp_sum",
    "exp_sum_oracle",
    "fiber_counts",
    "fiber_sums_over_apolar",
    "is_prime",
    "is_singular",
    "legendre",
    "minimal_generator",
    "multiply",
    "n_tilde_counts",
    "n_w",
    "pair",
    "perp_space",
    "projective_points",
    "quadratic_symbol",
    "rank_and_kernel",
    "rref",
    "sign_variant_discriminants",
    "singular_locus",
    "splitting_type",
    "sqrt_mod",
    "waring_type",
]

__version__ = "1.0.0"
