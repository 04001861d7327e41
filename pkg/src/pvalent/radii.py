"""Radius constants: closed forms plus a bracketing root solver.

The closed forms are written in rationalized form, ``2c/(b + sqrt(b^2 - 4ac))``
for the small root of ``a r^2 - b r + c``, which is stable when the leading
coefficient is near zero and continuous through it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import NoRootError, ParameterError

SCAN_STEP = 1e-3


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial with ascending coefficients ``c_0 .. c_d``."""

    coeffs: tuple

    def __post_init__(self):
        c = [float(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0.0:
            c.pop()
        if len(c) < 2:
            raise ParameterError("polynomial must have degree >= 1")
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, r):
        return np.polynomial.polynomial.polyval(r, self.coeffs)

    def roots(self):
        return np.polynomial.polynomial.polyroots(self.coeffs)


def smallest_positive_root(poly, hi=1.0, xtol=1e-13):
    """Smallest root in ``(0, hi]``: scan for the first sign change, then Brent.

    A root sitting exactly on a scan node is returned as is.
    """
    if not hi > 0:
        raise ParameterError("hi must be > 0")
    steps = max(1, int(math.ceil(hi / SCAN_STEP)))
    grid = np.linspace(0.0, hi, steps + 1)
    vals = poly(grid)
    for i in range(1, steps + 1):
        if vals[i] == 0.0:
            return float(grid[i])
        if vals[i - 1] * vals[i] < 0:
            return float(brentq(poly, grid[i - 1], grid[i], xtol=xtol, rtol=4 * np.finfo(float).eps))
    raise NoRootError(f"no sign change of the polynomial on (0, {hi}]")


def _small_root(a, b, c):
    """Smaller positive root of ``a x^2 - b x + c`` with ``b, c > 0``, ``b^2 >= 4ac``."""
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise NoRootError("negative discriminant")
    return 2.0 * c / (b + math.sqrt(disc))


def _check_kappa(kappa):
    if not 0 <= kappa < 1:
        raise ParameterError(f"need 0 <= kappa < 1, got {kappa}")


def _check_scale(p, alpha, beta):
    if not beta > 0 or not alpha + p * beta > 0:
        raise ParameterError("need beta > 0 and alpha + p*beta > 0")


# -- inclusion radius --------------------------------------------------------

def mu_kappa_polynomial(p, alpha, beta, mu, kappa):
    S = alpha + p * beta
    return RealPolynomial((S, -2.0 * (S * (1.0 - kappa) + mu * beta), S * (1.0 - 2.0 * kappa)))


def radius_mu_kappa(p, alpha, beta, mu, kappa):
    """Largest disk on which the class functional keeps real part above ``kappa``.

    Smallest positive root of ``S(1-2k) r^2 - 2(S(1-k) + mu beta) r + S`` with
    ``S = alpha + p beta``; at ``kappa = 1/2`` this is ``S / (2(S(1-k) + mu beta))``.
    """
    _check_scale(p, alpha, beta)
    _check_kappa(kappa)
    if not mu >= 0:
        raise ParameterError("mu must be >= 0")
    S = alpha + p * beta
    X = S * (1.0 - kappa) + mu * beta
    D = (S * kappa - mu * beta) ** 2 + 2.0 * mu * beta * S
    return S / (X + math.sqrt(D))


def radius_from_rho(p, mu, rho):
    """The ``m = alpha = 0, beta = 1`` case with ``kappa = rho/p``."""
    if not 0 <= rho < p:
        raise ParameterError(f"need 0 <= rho < p, got {rho}")
    return radius_mu_kappa(p, 0.0, 1.0, mu, rho / p)


def power_polynomial(p, n, alpha, beta, mu, power_gamma, kappa):
    """Polynomial in ``r`` (degree ``2n``) whose smallest positive root is the power-class radius."""
    S = (1.0 - mu) * (alpha + p * beta)
    c = np.zeros(2 * n + 1)
    c[0] = S
    c[n] = -2.0 * (S * (1.0 - kappa) + n * mu * beta * power_gamma)
    c[2 * n] = S * (1.0 - 2.0 * kappa)
    return RealPolynomial(tuple(c))


def radius_power(p, n, alpha, beta, mu, power_gamma, kappa):
    """Radius for the power-type class: a quadratic in ``x = r**n``."""
    _check_scale(p, alpha, beta)
    _check_kappa(kappa)
    if not 0 < mu < 1:
        raise ParameterError(f"need 0 < mu < 1, got {mu}")
    if not 0 < power_gamma <= 1:
        raise ParameterError(f"need 0 < power_gamma <= 1, got {power_gamma}")
    S = (1.0 - mu) * (alpha + p * beta)
    x = _small_root(S * (1.0 - 2.0 * kappa), 2.0 * (S * (1.0 - kappa) + n * mu * beta * power_gamma), S)
    return x ** (1.0 / n)


def linear_polynomial(p, n, alpha, beta, mu):
    S = alpha + p * beta
    c = np.zeros(2 * n + 1)
    c[0] = S
    c[n] = -2.0 * n * mu * beta
    c[2 * n] = -S
    return RealPolynomial(tuple(c))


def radius_linear(p, n, alpha, beta, mu):
    """``[(sqrt(S^2 + (mu beta n)^2) - mu beta n) / S]**(1/n)``, ``S = alpha + p beta``."""
    _check_scale(p, alpha, beta)
    if not mu > 0:
        raise ParameterError("mu must be > 0")
    S = alpha + p * beta
    k = mu * beta * n
    x = S / (math.hypot(S, k) + k)
    return x ** (1.0 / n)


# -- majorization ------------------------------------------------------------

def majorization_cubic(p, alpha, beta, A, B, variant="theorem"):
    """Cubic whose smallest positive root is the majorization radius.

    ``S|A| r^3 - (S + 2 beta|B|) r^2 - (S|A| + 2 beta) r + S`` with
    ``S = alpha + p beta``.  ``variant="printed"`` swaps in the alternate
    ``r^2`` coefficient ``S + beta|B|``.
    """
    _check_scale(p, alpha, beta)
    if not -1 <= B < A <= 1:
        raise ParameterError(f"need -1 <= B < A <= 1, got A={A}, B={B}")
    S = alpha + p * beta
    a, b = abs(A), abs(B)
    if variant == "theorem":
        r2 = S + 2.0 * beta * b
    elif variant == "printed":
        r2 = S + beta * b
    else:
        raise ParameterError(f"unknown variant {variant!r}")
    return RealPolynomial((S, -(S * a + 2.0 * beta), -r2, S * a))


def majorization_radius(p, alpha, beta, A, B, variant="theorem"):
    """Smallest positive root of the majorization cubic, from its companion eigenvalues."""
    poly = majorization_cubic(p, alpha, beta, A, B, variant)
    roots = poly.roots()
    real = roots[np.abs(roots.imag) <= 1e-9 * np.maximum(1.0, np.abs(roots))].real
    pos = np.sort(real[(real > 0) & (real <= 1)])
    if pos.size == 0:
        raise NoRootError("majorization cubic has no root in (0, 1]")
    r = float(pos[0])
    # one Newton step on the cubic tidies eigenvalue roundoff
    d = np.polynomial.polynomial.polyval(r, np.polynomial.polynomial.polyder(poly.coeffs))
    if d != 0:
        r -= poly(r) / d
    return float(r)


def majorization_quadratic(p, eta):
    """``|p-2 eta| r^2 - (p + |p-2 eta| + 2) r + p``, the cubic with ``r = -1`` factored out."""
    c = abs(p - 2.0 * eta)
    return RealPolynomial((p, -(p + c + 2.0), c))


def majorization_radius_closed(p, eta):
    """Closed-form majorization radius for ``A = 1 - 2 eta/p``, ``B = -1``, ``alpha = 0``, ``beta = 1``."""
    if not 0 <= eta < p:
        raise ParameterError(f"need 0 <= eta < p, got {eta}")
    c = abs(p - 2.0 * eta)
    if c == 0:
        return p / (p + 2.0)
    s = p + c + 2.0
    return 2.0 * p / (s + math.sqrt(s * s - 4.0 * p * c))
