"""Exact arithmetic for multizeta special values over F_q(θ).

The package decides whether the multizeta value of a composition
(s_1, ..., s_r) — or a Carlitz multiple polylogarithm value — satisfies
a rational relation with the appropriate power of the fundamental
period ("is Eulerian"), by building the associated t-module, its
distinguished integral points, and an explicit annihilator candidate,
then testing torsion in exact arithmetic.  A truncated Laurent-series
oracle provides an independent numeric cross-check.
"""
from .fields import FieldSpec, field_for_q
from .poly import BiPoly, Poly, RatFrac, TwistError
from .laurent import LaurentNumber, PrecisionError, rational_reconstruct
from .carlitz import CarlitzCache, cache_for, cache_for_q
from .motive import Motive, ReductionBudgetError
from .tmodule import (
    ProbeDomain,
    TModule,
    carlitz_tensor_module,
    depth1_special_point,
)
from .criterion import (
    AnnihilatorData,
    Verdict,
    WeightDecomp,
    ZetaLikeVerdict,
    annihilator_cmpl,
    annihilator_mzv,
    check_suffix_consistency,
    decompose_weight,
    default_zetalike_bound,
    is_cmpl_eulerian,
    is_eulerian,
    is_zeta_like,
    torsion_witness,
)
from .families import (
    FamilyTuple,
    SweepReport,
    compare_sweep,
    eu_base,
    eu_canonical,
    extra_family,
    is_primitive,
    predicted_eulerian,
)
from .oracle import (
    BudgetError,
    SeriesContext,
    carlitz_formula_check,
    pi_power,
    run_identity_corpus,
    verify_verdict,
    zeta_laurent,
)

__all__ = [
    "AnnihilatorData",
    "BiPoly",
    "BudgetError",
    "CarlitzCache",
    "FamilyTuple",
    "FieldSpec",
    "LaurentNumber",
    "Motive",
    "Poly",
    "PrecisionError",
    "ProbeDomain",
    "RatFrac",
    "ReductionBudgetError",
    "SeriesContext",
    "SweepReport",
    "TModule",
    "TwistError",
    "Verdict",
    "WeightDecomp",
    "ZetaLikeVerdict",
    "annihilator_cmpl",
    "annihilator_mzv",
    "cache_for",
    "cache_for_q",
    "carlitz_formula_check",
    "carlitz_tensor_module",
    "check_suffix_consistency",
    "compare_sweep",
    "decompose_weight",
    "default_zetalike_bound",
    "depth1_special_point",
    "eu_base",
    "eu_canonical",
    "extra_family",
    "field_for_q",
    "is_cmpl_eulerian",
    "is_eulerian",
    "is_primitive",
    "is_zeta_like",
    "pi_power",
    "predicted_eulerian",
    "rational_reconstruct",
    "run_identity_corpus",
    "torsion_witness",
    "verify_verdict",
    "zeta_laurent",
]

__version__ = "0.1.0"
