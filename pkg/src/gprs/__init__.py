"""Generalized projective Reed-Solomon codes over small finite fields.

Exact construction, error distances, covering radii, and deep-hole
characterizations with exhaustive verification sweeps.
"""

from .galois import (
    FieldElement,
    FiniteField,
    field,
    field_from_spec,
    field_of_order,
)
from .polynomial import Polynomial, expand_shifted_power, lagrange_interpolate
from .matrix import Matrix, MdsCheckResult, mds_generator_check, vandermonde_det
from .codes import (
    BudgetExceededError,
    DEFAULT_DISTANCE_BUDGET,
    DEFAULT_MESSAGE_BUDGET,
    GprsCode,
    GrsCode,
    ReceivedWord,
    hamming_distance,
)
from .deepholes import (
    DeepHoleVerdict,
    HypothesisError,
    WordFamilySpec,
    binom_mod_p,
    build_family_word,
    is_deep_hole_mds_extension,
    is_deep_hole_oracle,
    thm14_criterion,
    thm15_criterion,
    validate_verdict,
    vp_binomial,
    zero_sum_subset,
)
from .verify import SweepConfig, SweepReport, check_liwan_bounds, run_sweep

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FiniteField",
    "field",
    "field_from_spec",
    "field_of_order",
    "Polynomial",
    "expand_shifted_power",
    "lagrange_interpolate",
    "Matrix",
    "MdsCheckResult",
    "mds_generator_check",
    "vandermonde_det",
    "BudgetExceededError",
    "DEFAULT_DISTANCE_BUDGET",
    "DEFAULT_MESSAGE_BUDGET",
    "GprsCode",
    "GrsCode",
    "ReceivedWord",
    "hamming_distance",
    "DeepHoleVerdict",
    "HypothesisError",
    "WordFamilySpec",
    "binom_mod_p",
    "build_family_word",
    "is_deep_hole_mds_extension",
    "is_deep_hole_oracle",
    "thm14_criterion",
    "thm15_criterion",
    "validate_verdict",
    "vp_binomial",
    "zero_sum_subset",
    "SweepConfig",
    "SweepReport",
    "check_liwan_bounds",
    "run_sweep",
    "__version__",
]
