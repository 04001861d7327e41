"""Closed-form sharp constants of the inclusion and coefficient theorems.

Every bound is a reciprocal or affine image of a ``2F1`` value at
``B/(B-1)``.  Each public function checks the hypotheses under which the
constant is a guaranteed (and sharp) bound and raises ``HypothesisError``
when they fail; ``force=True`` evaluates the formula anyway and emits an
``OutsideHypothesesWarning`` instead.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import HypothesisError, ParameterError
from .hypergeom import hyp2f1_real


class OutsideHypothesesWarning(UserWarning):
    """A bound was evaluated outside the hypotheses that make it valid."""


@dataclass(frozen=True)
class ClassParams:
    """``(mu, A, B)`` of the subordination class, with ``-1 <= B < A <= 1``."""

    mu: float
    A: float
    B: float

    def __post_init__(self):
        if not self.mu >= 0:
            raise ParameterError(f"mu must be >= 0, got {self.mu}")
        check_AB(self.A, self.B)

    @property
    def kappa(self):
        return kappa_from(self.A, self.B)


def check_AB(A, B):
    if not -1 <= B < A <= 1:
        raise ParameterError(f"need -1 <= B < A <= 1, got A={A}, B={B}")


def kappa_from(A, B):
    """``(1 - A)/(1 - B)``, the real-part lower bound of ``(1+Az)/(1+Bz)``."""
    check_AB(A, B)
    return (1.0 - A) / (1.0 - B)


def _check_operator(p, alpha, beta):
    if p < 1 or int(p) != p:
        raise ParameterError(f"p must be a positive integer, got {p}")
    if not beta > 0:
        raise ParameterError(f"beta must be > 0, got {beta}")
    if not alpha + p * beta > 0:
        raise ParameterError("alpha + p*beta must be > 0")


def _positive(name, value):
    if not value > 0:
        raise ParameterError(f"{name} must be > 0, got {value}")


def _enforce(violations, force):
    if not violations:
        return
    if not force:
        raise HypothesisError(violations)
    warnings.warn("; ".join(violations), OutsideHypothesesWarning, stacklevel=3)


def _need_negative_B(B):
    if not B < 0:
        raise ParameterError(f"formula needs B < 0 (argument B/(B-1)), got B={B}")


# -- inclusion (order of the operator ratio) ---------------------------------

def rho_inclusion_hypotheses(p, alpha, beta, mu, A, B):
    """Violated conditions for the order ``rho`` (empty list when valid)."""
    cap = -mu * beta * B / (alpha + p * beta)
    out = []
    if not B < 0:
        out.append(f"B={B} must be < 0")
    if A > cap:
        out.append(f"A={A} exceeds -mu*beta*B/(alpha+p*beta)={cap}")
    return out


def rho_inclusion(p, alpha, beta, mu, A, B, *, force=False):
    """Sharp lower bound of ``Re(T^{m+1} f / T^m f)`` over the class.

    ``1 / 2F1(1, c(B-A)/B; c+1; B/(B-1))`` with ``c = (alpha+p beta)/(mu beta)``.
    """
    _check_operator(p, alpha, beta)
    _positive("mu", mu)
    check_AB(A, B)
    _enforce(rho_inclusion_hypotheses(p, alpha, beta, mu, A, B), force)
    _need_negative_B(B)
    c = (alpha + p * beta) / (mu * beta)
    return 1.0 / hyp2f1_real(1.0, c * (B - A) / B, c + 1.0, B / (B - 1.0))


def rho_tilde(p, alpha, beta, A, B, *, force=False):
    """``rho_inclusion`` at ``mu = 1``."""
    return rho_inclusion(p, alpha, beta, 1.0, A, B, force=force)


def starlike_integral_constant(p, alpha, A_tilde, B, *, force=False):
    """Lower bound for ``Re(z**alpha f / int_0^1 t**(alpha-1) f(t) dt)`` over
    starlike functions of type ``(A_tilde, B)``.

    Equals ``(p+alpha) rho_inclusion(p, alpha, 1, 1, A, B)`` with
    ``A = (p A_tilde + alpha B)/(p + alpha)``.
    """
    if not alpha > -p:
        raise ParameterError("alpha must exceed -p")
    A = (p * A_tilde + alpha * B) / (p + alpha)
    return (p + alpha) * rho_inclusion(p, alpha, 1.0, 1.0, A, B, force=force)


# -- integral operator preserving the class ----------------------------------

def tau_hypotheses(p, alpha, beta, delta, A, B):
    scale = alpha + p * beta
    out = []
    if not B < 0:
        out.append(f"B={B} must be < 0")
        return out
    t1 = scale / beta * (B - A) / B - p - 1
    t2 = alpha / beta - scale * (1 - A) / (beta * (1 - B))
    if delta < max(t1, t2):
        out.append(f"delta={delta} below threshold {max(t1, t2)}")
    return out


def tau_integral_preserve(p, alpha, beta, delta, A, B, *, force=False):
    """Order of the image class under the integral operator with parameter ``delta``."""
    _check_operator(p, alpha, beta)
    check_AB(A, B)
    if not delta > -p:
        raise ParameterError(f"delta must exceed -p, got {delta}")
    _enforce(tau_hypotheses(p, alpha, beta, delta, A, B), force)
    _need_negative_B(B)
    scale = alpha + p * beta
    F = hyp2f1_real(1.0, scale * (B - A) / (beta * B), delta + p + 1.0, B / (B - 1.0))
    return (beta * (delta + p) / F - (delta * beta - alpha)) / scale


# -- power-type functional ----------------------------------------------------

def xi_power_hypotheses(p, alpha, beta, mu, power_gamma, A, B):
    out = []
    if not B < 0:
        out.append(f"B={B} must be < 0")
    cap = min(1 - mu * (1 - B), -mu * (beta * power_gamma / (alpha + p * beta) - 1) * B)
    if A > cap:
        out.append(f"A={A} exceeds {cap}")
    return out


def xi_power(p, alpha, beta, mu, power_gamma, A, B, *, force=False):
    """Lower bound of ``Re (T^m f / z**p)**(1/gamma)`` for the power-type class."""
    _check_operator(p, alpha, beta)
    if not 0 < mu < 1:
        raise ParameterError(f"need 0 < mu < 1, got {mu}")
    if not 0 < power_gamma <= 1:
        raise ParameterError(f"need 0 < power_gamma <= 1, got {power_gamma}")
    check_AB(A, B)
    _enforce(xi_power_hypotheses(p, alpha, beta, mu, power_gamma, A, B), force)
    _need_negative_B(B)
    c = (alpha + p * beta) / (mu * beta * power_gamma)
    return 1.0 / hyp2f1_real(1.0, c * (B - A) / B, (1 - mu) * c + 1.0, B / (B - 1.0))


# -- averaged dominants ------------------------------------------------------

def _averaged_constant(c, A, B):
    if B == 0:
        return 1.0 - c * A / (c + 1.0)
    return A / B + (1.0 - A / B) / (1.0 - B) * hyp2f1_real(1.0, 1.0, c + 1.0, B / (B - 1.0))


def sigma_coeff(p, n, alpha, beta, mu, A, B, t=1):
    """``sigma**(1/t)``: lower bound of ``Re (T^m f / z**p)**(1/t)``.

    ``sigma`` is the averaged dominant evaluated at ``z = -1`` with
    ``c = (alpha+p beta)/(mu beta n)``.
    """
    _check_operator(p, alpha, beta)
    _positive("mu", mu)
    check_AB(A, B)
    if t < 1 or int(t) != t:
        raise ParameterError(f"t must be a positive integer, got {t}")
    sigma = _averaged_constant((alpha + p * beta) / (mu * beta * n), A, B)
    return sigma if t == 1 else sigma ** (1.0 / t)


def xi_F(p, n, delta, mu, A, B, t=1):
    """Lower bound for the integral-operator image; ``c = (delta+p)/(mu n)``."""
    _positive("mu", mu)
    check_AB(A, B)
    if not delta > -p:
        raise ParameterError(f"delta must exceed -p, got {delta}")
    if t < 1 or int(t) != t:
        raise ParameterError(f"t must be a positive integer, got {t}")
    xi = _averaged_constant((delta + p) / (mu * n), A, B)
    return xi if t == 1 else xi ** (1.0 / t)


def eta_convolution(p, alpha, beta, mu, A1, B1, A2, B2):
    """Lower bound of the averaged functional of a Hadamard product.

    ``1 - 4 (A1-B1)(A2-B2)/((1-B1)(1-B2)) * (1 - 2F1(1, 1; c+1; 1/2)/2)``
    with ``c = (alpha+p beta)/(mu beta)``; sharp when ``B1 = B2 = -1``.
    """
    _check_operator(p, alpha, beta)
    _positive("mu", mu)
    check_AB(A1, B1)
    check_AB(A2, B2)
    c = (alpha + p * beta) / (mu * beta)
    factor = 4.0 * (A1 - B1) * (A2 - B2) / ((1.0 - B1) * (1.0 - B2))
    return 1.0 - factor * (1.0 - 0.5 * hyp2f1_real(1.0, 1.0, c + 1.0, 0.5))


def rho_convexity_hypotheses(p, eta):
    if not (p - 1) / 2 <= eta < p:
        return [f"eta={eta} outside [(p-1)/2, p)"]
    return []


def rho_convexity(p, eta, *, force=False):
    """Starlikeness order ``p / 2F1(1, 2(p-eta); p+1; 1/2)`` of convex functions of order eta."""
    if p < 1 or int(p) != p:
        raise ParameterError(f"p must be a positive integer, got {p}")
    _enforce(rho_convexity_hypotheses(p, eta), force)
    return p / hyp2f1_real(1.0, 2.0 * (p - eta), p + 1.0, 0.5)
