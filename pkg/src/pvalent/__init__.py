"""Multiplier operators on p-valent series, sharp bounds and numerical verifiers."""

from .bounds import (
    ClassParams,
    OutsideHypothesesWarning,
    eta_convolution,
    kappa_from,
    rho_convexity,
    rho_inclusion,
    rho_tilde,
    sigma_coeff,
    starlike_integral_constant,
    tau_integral_preserve,
    xi_F,
    xi_power,
)
from .errors import (
    DomainError,
    HypothesisError,
    NoRootError,
    NormalizationError,
    NumericError,
    ParameterError,
    PoleError,
    PValentError,
)
from .hypergeom import (
    QIntegralSpec,
    QKind,
    best_dominant_q,
    best_dominant_taylor,
    gauss_2f1,
    lemma1_average,
    q_integral,
)
from .radii import (
    RealPolynomial,
    majorization_radius,
    majorization_radius_closed,
    radius_linear,
    radius_mu_kappa,
    radius_power,
    smallest_positive_root,
)
from .series import (
    OperatorParams,
    PSeries,
    apply_theta,
    differentiate,
    evaluate,
    hadamard,
    integral_operator,
    series_from_ratio,
    theta_identity_residual,
)
from .subordination import (
    Grid,
    Region,
    VerifyReport,
    caratheodory_lower_bound_check,
    class_membership,
    extremal_ratio,
    is_subordinate,
    majorization_check,
    target_region,
)
