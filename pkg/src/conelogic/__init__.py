"""conelogic: exact normed positive cones with linear-logic structure.

Objects are finite-dimensional cones presented by mutually polar generator
lists; all core arithmetic is exact rational. On top of that sit the
multiplicative/additive connectives with their morphism algebra, truncated
exponentials with delta distributions and analytic maps, a probabilistic
backend (exact) and a spectral PSD backend (floating point, toleranced),
and a small formula language with an interpreter and law-check driver.
"""

from __future__ import annotations

from .backends import (
    bool_obj,
    cube_pcs,
    lattice_meet_samples,
    morphism_to_pcs_matrix,
    pcs_contraction_flag,
    pcs_matrix_to_morphism,
    pcs_object,
    qcs_duality_report,
    qcs_object,
    qcs_op_norm,
    qcs_pair,
    qcs_trace_norm,
    simplex_pcs,
)
from .cones import (
    Backend,
    ConeObject,
    bot_obj,
    dual_object,
    from_both_gens,
    from_p_gens,
    gauge_norm,
    in_ball,
    in_cone,
    materialize_p,
    materialize_q,
    norm_dual,
    norm_primal,
    one_obj,
    pairing,
    top_obj,
    validate_object,
    zero_obj,
)
from .errors import (
    BallError,
    CapabilityError,
    CompositionError,
    ConelogicError,
    DimensionError,
    EnvError,
    MembershipError,
    NegativeCoefficientError,
    ParseError,
)
from .exponentials import (
    DEFAULT_TRUNC,
    AnalyticMap,
    GradedDistribution,
    GradedSeries,
    analytic_as_morphism,
    analytic_compose,
    analytic_eval,
    analytic_from_hom,
    analytic_map,
    analytic_norm_bounds,
    bang_mor,
    bang_obj,
    delta,
    diag_mult,
    distribution_norm_bounds,
    eta,
    exp_iso,
    graded_coords,
    graded_coproduct_obj,
    graded_grades,
    graded_norm_bounds,
    graded_pairing,
    graded_par_obj,
    graded_product_obj,
    graded_tensor_obj,
    monoid_unit,
    mu,
    pair_element,
    series_eval,
    series_norm_bounds,
    whynot_mor,
    whynot_obj,
)
from .formulas import (
    Formula,
    atom,
    dual_formula,
    format_formula,
    normalize_dual,
    parse_formula,
)
from .interpreter import env_from_json, interpret, load_env
from .mall import (
    Morphism,
    adjoint,
    compose,
    coproduct_obj,
    cotensor_obj,
    curry,
    hom_obj,
    identity,
    is_contraction,
    mor,
    morphism_norm,
    product_obj,
    tensor_obj,
    uncurry,
)
from .oracle import DEFAULT_PARAMS, Bracket, OracleParams
from .suites import run_suites
from .symmetric import (
    new_norm_bounds,
    old_norm,
    polarization_constant,
    sym_power_mor,
    sym_power_obj,
    sym_tensor,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ConelogicError",
    "DimensionError",
    "CapabilityError",
    "MembershipError",
    "CompositionError",
    "BallError",
    "ParseError",
    "EnvError",
    "NegativeCoefficientError",
    # cones
    "Backend",
    "ConeObject",
    "from_p_gens",
    "from_both_gens",
    "dual_object",
    "one_obj",
    "bot_obj",
    "zero_obj",
    "top_obj",
    "norm_primal",
    "norm_dual",
    "gauge_norm",
    "pairing",
    "in_cone",
    "in_ball",
    "materialize_p",
    "materialize_q",
    "validate_object",
    # mall
    "Morphism",
    "mor",
    "identity",
    "compose",
    "adjoint",
    "morphism_norm",
    "is_contraction",
    "tensor_obj",
    "cotensor_obj",
    "hom_obj",
    "product_obj",
    "coproduct_obj",
    "curry",
    "uncurry",
    # symmetric powers
    "sym_tensor",
    "sym_power_obj",
    "sym_power_mor",
    "old_norm",
    "new_norm_bounds",
    "polarization_constant",
    # exponentials
    "DEFAULT_TRUNC",
    "whynot_obj",
    "bang_obj",
    "GradedSeries",
    "GradedDistribution",
    "delta",
    "series_eval",
    "graded_pairing",
    "pair_element",
    "series_norm_bounds",
    "distribution_norm_bounds",
    "graded_norm_bounds",
    "graded_coords",
    "graded_grades",
    "graded_tensor_obj",
    "graded_par_obj",
    "graded_product_obj",
    "graded_coproduct_obj",
    "eta",
    "mu",
    "monoid_unit",
    "diag_mult",
    "whynot_mor",
    "bang_mor",
    "exp_iso",
    "AnalyticMap",
    "analytic_map",
    "analytic_eval",
    "analytic_as_morphism",
    "analytic_from_hom",
    "analytic_compose",
    "analytic_norm_bounds",
    # oracle
    "Bracket",
    "OracleParams",
    "DEFAULT_PARAMS",
    # backends
    "pcs_object",
    "simplex_pcs",
    "cube_pcs",
    "bool_obj",
    "pcs_matrix_to_morphism",
    "morphism_to_pcs_matrix",
    "pcs_contraction_flag",
    "lattice_meet_samples",
    "qcs_object",
    "qcs_trace_norm",
    "qcs_op_norm",
    "qcs_pair",
    "qcs_duality_report",
    # formulas and interpretation
    "Formula",
    "atom",
    "parse_formula",
    "format_formula",
    "normalize_dual",
    "dual_formula",
    "interpret",
    "env_from_json",
    "load_env",
    "run_suites",
]
