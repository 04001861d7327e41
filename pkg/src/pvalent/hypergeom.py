"""Gauss hypergeometric function and the best-dominant functions built on it.

Three families of best dominants are covered, all solutions of the
Briot-Bouquet equation

    q(z) + z q'(z) / (b* q(z) + g*) = (1 + A z) / (1 + B z),

which after the substitution ``t -> t z`` reads ``q = 1/(b* Q) - g*/b*``
with

    Q(z) = int_0^1 t**(b*+g*-1) ((1 + B t z)/(1 + B z))**(b*(A-B)/B) dt    (B != 0)
    Q(z) = int_0^1 t**(b*+g*-1) exp(b* A (t-1) z) dt                          (B == 0)

The kinds differ only in ``(b*, g*)`` and in a final affine map:

* ``inclusion``:         b* = (alpha+p beta)/(mu beta),        g* = 0
* ``integral_preserve``: b* = (alpha+p beta)/beta,             g* = (delta beta - alpha)/beta
* ``power``:             b* = (alpha+p beta)/(mu beta gamma),  g* = -(alpha+p beta)/(beta gamma),
  returning ``(q - mu)/(1 - mu)``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, NumericError, ParameterError
from .quadrature import T_MIN, tanh_sinh

MAX_TERMS = 100_000
SERIES_RTOL = 1e-17


def _max_terms():
    env = os.environ.get("PVALENT_MAX_TERMS")
    if env is None:
        return MAX_TERMS
    try:
        value = int(env)
    except ValueError as exc:
        raise ParameterError(f"PVALENT_MAX_TERMS must be an integer, got {env!r}") from exc
    if value < 1:
        raise ParameterError("PVALENT_MAX_TERMS must be positive")
    return value


def _is_nonpositive_int(x):
    return x <= 0 and float(x).is_integer()


def _series_2f1(a, b, c, w, max_terms):
    term = 1.0 + 0j
    total = 1.0 + 0j
    for k in range(max_terms):
        ratio = (a + k) * (b + k) / ((c + k) * (k + 1)) * w
        term *= ratio
        total += term
        if term == 0:
            return total
        if abs(term) < SERIES_RTOL * abs(total) and abs(ratio) < 1:
            return total
    raise NumericError(f"2F1 series did not converge in {max_terms} terms (|w|={abs(w):.6g})")


def gauss_2f1(a, b, c, z):
    """Gauss hypergeometric function ``2F1(a, b; c; z)`` for real parameters.

    The series is summed at whichever of ``z`` and ``z/(z-1)`` has the
    smaller modulus (Pfaff transformation), so real ``z`` anywhere in
    ``(-inf, 1)`` and complex ``|z| < 1`` are handled.  The parameters are
    put in a canonical order first, which makes the result exactly symmetric
    in ``a`` and ``b``.
    """
    if _is_nonpositive_int(c):
        raise ParameterError(f"c must not be a non-positive integer, got {c}")
    a, b = sorted((float(a), float(b)))
    z = complex(z)
    if z == 0:
        return 1.0 + 0j
    if z == 1:
        raise DomainError("2F1 is not evaluated at z = 1")
    max_terms = _max_terms()
    w = z / (z - 1.0)
    # a nonpositive-integer parameter makes the direct series a polynomial
    terminating = _is_nonpositive_int(a) or _is_nonpositive_int(b)
    if abs(w) < abs(z) and not terminating:
        if abs(w) >= 1:
            raise DomainError(f"|z/(z-1)| = {abs(w):.6g} >= 1 after Pfaff transformation")
        return (1.0 - z) ** (-a) * _series_2f1(a, c - b, c, w, max_terms)
    if abs(z) >= 1 and not terminating:
        raise DomainError(f"|z| = {abs(z):.6g} >= 1")
    return _series_2f1(a, b, c, z, max_terms)


def hyp2f1_real(a, b, c, x):
    """Real part of ``gauss_2f1`` for real arguments where the value is real."""
    return gauss_2f1(a, b, c, x).real


class QKind(str, Enum):
    INCLUSION = "inclusion"
    INTEGRAL_PRESERVE = "integral_preserve"
    POWER = "power"


@dataclass(frozen=True)
class QIntegralSpec:
    """Parameters of one of the ``Q`` integrals and its best dominant ``q``.

    Use the ``inclusion``, ``integral_preserve`` and ``power`` constructors
    rather than filling the fields by hand.
    """

    kind: QKind
    p: int
    alpha: float
    beta: float
    A: float
    B: float
    mu: float | None = None
    power_gamma: float | None = None
    delta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", QKind(self.kind))
        if not self.beta > 0 or not self.alpha + self.p * self.beta > 0:
            raise ParameterError("need beta > 0 and alpha + p*beta > 0")
        if not -1 <= self.B < self.A <= 1:
            raise ParameterError(f"need -1 <= B < A <= 1, got A={self.A}, B={self.B}")
        if self.kind in (QKind.INCLUSION, QKind.POWER) and not (self.mu is not None and self.mu > 0):
            raise ParameterError("mu must be > 0")
        if self.kind is QKind.POWER:
            if not self.mu < 1:
                raise ParameterError("power kind needs 0 < mu < 1")
            if self.power_gamma is None or not 0 < self.power_gamma <= 1:
                raise ParameterError("power kind needs 0 < power_gamma <= 1")
        if self.kind is QKind.INTEGRAL_PRESERVE and self.delta is None:
            raise ParameterError("integral_preserve kind needs delta")
        if not self.exponent_base > 0:
            raise ParameterError(
                f"t-exponent base {self.exponent_base} must be > 0 for integrability"
            )

    @classmethod
    def inclusion(cls, p, alpha, beta, mu, A, B):
        return cls(QKind.INCLUSION, p, alpha, beta, A, B, mu=mu)

    @classmethod
    def integral_preserve(cls, p, alpha, beta, delta, A, B):
        return cls(QKind.INTEGRAL_PRESERVE, p, alpha, beta, A, B, delta=delta)

    @classmethod
    def power(cls, p, alpha, beta, mu, power_gamma, A, B):
        return cls(QKind.POWER, p, alpha, beta, A, B, mu=mu, power_gamma=power_gamma)

    @property
    def scale(self):
        return self.alpha + self.p * self.beta

    @property
    def beta_star(self):
        if self.kind is QKind.INCLUSION:
            return self.scale / (self.mu * self.beta)
        if self.kind is QKind.INTEGRAL_PRESERVE:
            return self.scale / self.beta
        return self.scale / (self.mu * self.beta * self.power_gamma)

    @property
    def gamma_star(self):
        if self.kind is QKind.INCLUSION:
            return 0.0
        if self.kind is QKind.INTEGRAL_PRESERVE:
            return (self.delta * self.beta - self.alpha) / self.beta
        return -self.scale / (self.beta * self.power_gamma)

    @property
    def exponent_base(self):
        """``b`` in the weight ``t**(b-1)``."""
        if self.kind is QKind.INTEGRAL_PRESERVE:
            return self.delta + self.p
        if self.kind is QKind.POWER:
            return (1 - self.mu) * self.beta_star
        return self.beta_star

    @property
    def exponent_ratio(self):
        """Power of ``(1+Btz)/(1+Bz)``; ``None`` on the ``B = 0`` branch."""
        if self.B == 0:
            return None
        return self.beta_star * (self.A - self.B) / self.B

    def finish(self, raw_q):
        """Map the Briot-Bouquet solution to this kind's dominant."""
        if self.kind is QKind.POWER:
            return (raw_q - self.mu) / (1 - self.mu)
        return raw_q


def _q_integrand(spec, z):
    b = spec.exponent_base
    e = spec.exponent_ratio
    B = spec.B

    if e is None:
        rate = spec.beta_star * spec.A

        def f(t):
            t = t[:, None]
            return t ** (b - 1) * np.exp(rate * (t - 1.0) * z[None, :])

        at_zero = np.exp(-rate * z)
    else:

        def f(t):
            t = t[:, None]
            return t ** (b - 1) * ((1.0 + B * t * z[None, :]) / (1.0 + B * z[None, :])) ** e

        at_zero = (1.0 / (1.0 + B * z)) ** e
    return f, at_zero


def q_integral(spec, z, atol=1e-11):
    """The integral ``Q(z)`` of ``spec`` by tanh-sinh quadrature.

    ``z`` may be a scalar or an array (evaluated as one batch).  The part of
    the integral on ``[0, T_MIN]`` that the quadrature nodes never reach is
    added analytically, which matters only for very small exponent bases.
    """
    scalar = np.ndim(z) == 0
    zz = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
    if np.any(np.abs(zz) > 1):
        raise DomainError("Q is only evaluated for |z| <= 1")
    if spec.B != 0 and np.any(np.abs(1.0 + spec.B * zz) == 0):
        raise DomainError("z = -1/B is a singular point of Q")
    f, at_zero = _q_integrand(spec, zz)
    b = spec.exponent_base
    val = tanh_sinh(f, atol=atol) + at_zero * T_MIN ** b / b
    if scalar:
        return complex(val[0])
    return val.reshape(np.shape(z))


def best_dominant_q(spec, z, atol=1e-11):
    """Best dominant ``q(z)`` of the selected kind, via ``q_integral``."""
    Q = q_integral(spec, z, atol=atol)
    if np.any(Q == 0):
        raise NumericError("Q(z) vanished")
    raw_q = 1.0 / (spec.beta_star * Q) - spec.gamma_star / spec.beta_star
    return spec.finish(raw_q)


def q_closed_form(spec, z):
    """``Q(z)`` through its hypergeometric closed form (``B != 0``).

    ``Q(z) = (1/b) 2F1(1, -e; b+1; Bz/(1+Bz))`` where ``b`` is the exponent
    base and ``e`` the exponent ratio.
    """
    if spec.B == 0:
        raise DomainError("closed form needs B != 0")
    b = spec.exponent_base
    e = spec.exponent_ratio
    z = complex(z)
    return gauss_2f1(1.0, -e, b + 1.0, spec.B * z / (1.0 + spec.B * z)) / b


def target_taylor(A, B, K):
    """Coefficients ``h_0 .. h_K`` of ``(1 + A z)/(1 + B z)``."""
    h = np.empty(K + 1)
    h[0] = 1.0
    h[1:] = (A - B) * (-B) ** np.arange(K)
    return h


def best_dominant_taylor(spec, K):
    """Taylor coefficients ``q_0 .. q_K`` of the best dominant.

    Obtained from the differential equation itself: matching powers of ``z``
    in ``(b* q + g*)(q - h) + z q' = 0`` gives

        (b* + g* + k) q_k = b* sum_{i=1}^{k} h_i q_{k-i} - b* sum_{i=1}^{k-1} q_i q_{k-i} + g* h_k.
    """
    bs, gs = spec.beta_star, spec.gamma_star
    h = target_taylor(spec.A, spec.B, K)
    q = np.zeros(K + 1)
    q[0] = 1.0
    for k in range(1, K + 1):
        s_h = np.dot(h[1: k + 1], q[k - 1:: -1])
        s_q = np.dot(q[1:k], q[k - 1: 0: -1])
        q[k] = (bs * (s_h - s_q) + gs * h[k]) / (bs + gs + k)
    if spec.kind is QKind.POWER:
        q[1:] /= 1 - spec.mu
    return q


def lemma1_average(h, average_gamma, n, z, atol=1e-11):
    """Averaged dominant ``(g/n) z**(-g/n) int_0^z t**(g/n - 1) h(t) dt``.

    Computed along the radial segment as ``c int_0^1 s**(c-1) h(s z) ds``
    with ``c = g/n``.  ``h`` must accept arrays.  ``z`` may be an array.
    """
    if average_gamma == 0:
        raise ParameterError("average_gamma must be nonzero")
    c = average_gamma / n
    if not np.real(c) > 0:
        raise ParameterError("average_gamma must have positive real part for the integral to converge")
    scalar = np.ndim(z) == 0
    zz = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()

    def f(s):
        s = s[:, None]
        return s ** (c - 1) * h(s * zz[None, :])

    val = c * tanh_sinh(f, atol=atol) + h(np.zeros_like(zz)) * T_MIN ** c
    if scalar:
        return complex(val[0])
    return val.reshape(np.shape(z))


def average_dominant(p, n, alpha, beta, mu, A, B, z):
    """Closed form of the averaged dominant of ``(1+Az)/(1+Bz)``.

    With ``c = (alpha+p beta)/(mu beta n)``::

        B != 0:  A/B + (1 - A/B) (1+Bz)**-1 2F1(1, 1; c+1; Bz/(1+Bz))
        B == 0:  1 + c A z / (c + 1)
    """
    c = (alpha + p * beta) / (mu * beta * n)
    return _average_dominant_c(c, A, B, z)


def _average_dominant_c(c, A, B, z):
    z = complex(z)
    if B == 0:
        return 1.0 + c * A * z / (c + 1.0)
    return A / B + (1.0 - A / B) / (1.0 + B * z) * gauss_2f1(1.0, 1.0, c + 1.0, B * z / (1.0 + B * z))


def euler_integral(a, b, c, z, atol=1e-13, rtol=1e-13):
    """``int_0^1 t**(b-1) (1-t)**(c-b-1) (1-tz)**(-a) dt`` by quadrature."""
    if not c > b > 0:
        raise ParameterError("Euler integral needs c > b > 0")
    z = complex(z)

    def f(t, tc):
        return t ** (b - 1) * tc ** (c - b - 1) * (1.0 - t * z) ** (-a)

    val = tanh_sinh(f, atol=atol, rtol=rtol, complement=True)
    # end pieces beyond the outermost nodes
    val = val + T_MIN ** b / b + (1.0 - z) ** (-a) * T_MIN ** (c - b) / (c - b)
    return complex(val)


def euler_2f1(a, b, c, z):
    """``2F1`` recovered from the Euler integral (independent of the series)."""
    norm = math.gamma(b) * math.gamma(c - b) / math.gamma(c)
    return euler_integral(a, b, c, z) / norm
