"""Exact and numeric tools for symmetric quartic integrals and their
Landen transformations."""

from ._core import (
    AccuracyError,
    CheckPair,
    ConvergenceReport,
    DivergenceError,
    PiRational,
    QuadraticState,
    QuadratureResult,
    Rational,
    RationalFunction,
    SexticState,
    SingularStepError,
    agm,
    beta_half_integer,
    binomial,
    check_phi_identity,
    check_recurrence,
    cot_multiple,
    elliptic_integral,
    estimate_order,
    even_moment,
    hypergeometric_2f1_terminating,
    integrate,
    integrate_half_line,
    integrate_whole_line,
    landen_iterate,
    landen_numerator,
    landen_step,
    landen_transform,
    landen_transform_general,
    quartic_coefficient,
    quartic_coefficient_oracle,
    quartic_integrand,
    quartic_polynomial,
    quartic_transformed,
    quartic_value,
    quartic_value_exact,
    quartic_value_hypergeometric,
    quartic_value_landen_route,
    ramanujan_master_pair,
    sqrt_derivative_pair,
    sqrt_quartic,
    vanishing_odd_moment,
)

__all__ = [
    "AccuracyError",
    "CheckPair",
    "ConvergenceReport",
    "DivergenceError",
    "PiRational",
    "QuadraticState",
    "QuadratureResult",
    "Rational",
    "RationalFunction",
    "SexticState",
    "SingularStepError",
    "agm",
    "beta_half_integer",
    "binomial",
    "check_phi_identity",
    "check_recurrence",
    "cot_multiple",
    "elliptic_integral",
    "estimate_order",
    "even_moment",
    "hypergeometric_2f1_terminating",
    "integrate",
    "integrate_half_line",
    "integrate_whole_line",
    "landen_iterate",
    "landen_numerator",
    "landen_step",
    "landen_transform",
    "landen_transform_general",
    "quartic_coefficient",
    "quartic_coefficient_oracle",
    "quartic_integrand",
    "quartic_polynomial",
    "quartic_transformed",
    "quartic_value",
    "quartic_value_exact",
    "quartic_value_hypergeometric",
    "quartic_value_landen_route",
    "ramanujan_master_pair",
    "sqrt_derivative_pair",
    "sqrt_quartic",
    "vanishing_odd_moment",
]
