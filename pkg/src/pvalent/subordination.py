"""Sampled verification of subordination, class membership and majorization.

Every check here evaluates functions on a finite polar grid and reports
the worst margin it saw.  A passing report is numerical evidence, not a
proof; reports carry the label ``"evidence"`` to say so.

Subordination to a Mobius map ``h(w) = (1+Aw)/(1+Bw)`` is tested by image
containment, which is equivalent because ``h`` is univalent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial

from .bounds import check_AB, eta_convolution, kappa_from, rho_inclusion
from .errors import NormalizationError, ParameterError, PoleError
from .hypergeom import QIntegralSpec, best_dominant_taylor
from .radii import majorization_radius, radius_mu_kappa
from .series import (
    OperatorParams,
    PSeries,
    apply_theta,
    evaluate,
    evaluate_normalized,
    hadamard,
    integral_operator,
    series_from_ratio,
)

POLE_FLOOR = 1e-12
NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class Region:
    """Image of the unit disk under ``(1+Aw)/(1+Bw)``: a disk or a half-plane."""

    shape: str
    center: complex = 0j
    radius: float = 0.0
    re_bound: float = 0.0

    def __post_init__(self):
        if self.shape not in ("disk", "halfplane"):
            raise ParameterError(f"unknown region shape {self.shape!r}")
        if self.shape == "disk" and not self.radius > 0:
            raise ParameterError("disk radius must be > 0")

    def exterior_margin(self, w):
        """Signed distance outside the region (negative inside)."""
        w = np.asarray(w, dtype=complex)
        if self.shape == "disk":
            return np.abs(w - self.center) - self.radius
        return self.re_bound - w.real


def target_region(A, B):
    check_AB(A, B)
    if B == -1:
        return Region("halfplane", re_bound=(1.0 - A) / 2.0)
    d = 1.0 - B * B
    return Region("disk", center=complex((1.0 - A * B) / d), radius=(A - B) / d)


@dataclass(frozen=True)
class Grid:
    """Polar sample grid: radii ``r_max k/radial`` for ``k = 1..radial`` times ``angular`` angles."""

    radial: int = 64
    angular: int = 512
    r_max: float = 0.995

    def __post_init__(self):
        if self.radial < 1 or self.angular < 1:
            raise ParameterError("grid sizes must be positive")
        if not 0 < self.r_max < 1:
            raise ParameterError("r_max must lie in (0, 1)")

    def radii(self):
        return self.r_max * np.arange(1, self.radial + 1) / self.radial

    def angles(self):
        return 2.0 * np.pi * np.arange(self.angular) / self.angular

    def points(self):
        """Sample points, shape ``(radial, angular)``."""
        return self.radii()[:, None] * np.exp(1j * self.angles())[None, :]

    def scaled(self, r_max):
        return Grid(self.radial, self.angular, r_max)


@dataclass
class VerifyReport:
    passed: bool
    worst_violation: float
    witness: complex
    radial_samples: int
    angular_samples: int
    tolerance: float
    label: str = "evidence"
    details: dict = field(default_factory=dict)

    def to_json(self):
        out = {
            "pass": bool(self.passed),
            "worst_violation": float(self.worst_violation),
            "witness": {"re": float(self.witness.real), "im": float(self.witness.imag)},
            "radial_samples": int(self.radial_samples),
            "angular_samples": int(self.angular_samples),
            "tolerance": float(self.tolerance),
            "label": self.label,
        }
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return out

    def __bool__(self):
        return self.passed


def _jsonable(v):
    if isinstance(v, (complex, np.complexfloating)):
        return {"re": float(v.real), "im": float(v.imag)}
    if isinstance(v, (np.floating, np.integer, np.bool_)):
        return v.item()
    return v


def _report(margin, points, grid, tol, details=None):
    """Reduce a margin array (positive = violation) to a report."""
    i = np.unravel_index(np.argmax(margin), margin.shape)
    worst = max(0.0, float(margin[i]))
    return VerifyReport(
        passed=worst <= tol,
        worst_violation=worst,
        witness=complex(points[i]),
        radial_samples=grid.radial,
        angular_samples=grid.angular,
        tolerance=tol,
        details=details or {},
    )


def is_subordinate(phi, A, B, grid=None, tol=1e-9):
    """Check ``phi(U_r) ⊆ h(U)`` on a grid, with ``phi(0) = 1``."""
    grid = grid or Grid()
    region = target_region(A, B)
    at0 = complex(np.asarray(phi(np.zeros(1, dtype=complex)))[0])
    if abs(at0 - 1.0) > NORMALIZATION_TOL:
        raise NormalizationError(f"phi(0) = {at0}, expected 1")
    z = grid.points()
    return _report(region.exterior_margin(phi(z)), z, grid, tol)


def _check_denominator(vals, z, what):
    small = np.abs(vals) < POLE_FLOOR
    if np.any(small):
        i = np.unravel_index(np.argmax(small), small.shape)
        raise PoleError(f"{what} vanishes on the sample grid", complex(z[i]))


def class_functional(f, op, mu, z):
    """``(1-mu) T^{m+1}f/T^m f + mu T^{m+2}f/T^{m+1}f`` at the points ``z``.

    Ratios are formed from ``T^j f / z**p`` so the factor ``z**p`` cancels
    exactly and ``z = 0`` is harmless.
    """
    t0 = evaluate_normalized(apply_theta(f, op), z)
    t1 = evaluate_normalized(apply_theta(f, op.with_m(op.m + 1)), z)
    _check_denominator(t0, z, "T^m f / z^p")
    r1 = t1 / t0
    if mu == 0:
        return r1
    t2 = evaluate_normalized(apply_theta(f, op.with_m(op.m + 2)), z)
    _check_denominator(t1, z, "T^{m+1} f / z^p")
    return (1.0 - mu) * r1 + mu * t2 / t1


def class_membership(f, op, cls, grid=None, tol=1e-9):
    """Sampled test of the defining subordination of the class ``cls``."""
    grid = grid or Grid()
    z = grid.points()
    w = class_functional(f, op, cls.mu, z)
    region = target_region(cls.A, cls.B)
    return _report(region.exterior_margin(w), z, grid, tol, {"truncation": f.N})


def _as_callable(f):
    if isinstance(f, (PSeries, Polynomial)):
        return lambda z: evaluate(f, z)
    return f


def majorization_check(f, g, r, grid=None, tol=1e-9):
    """Check ``|f(z)| <= |g(z)| (1 + tol)`` for ``|z| <= r``.

    ``f`` and ``g`` may be ``PSeries``, numpy ``Polynomial`` or callables
    (operator images of majorized pairs are not normalized series).
    """
    if not 0 < r < 1:
        raise ParameterError(f"need 0 < r < 1, got {r}")
    if isinstance(f, PSeries) and isinstance(g, PSeries) and (f.p, f.n) != (g.p, g.n):
        raise ParameterError("f and g must share (p, n)")
    grid = (grid or Grid()).scaled(r)
    z = grid.points()
    fv = np.abs(_as_callable(f)(z))
    gv = np.abs(_as_callable(g)(z))
    rel = (fv - gv) / np.maximum(gv, np.finfo(float).tiny)
    return _report(rel, z, grid, tol)


def caratheodory_lower_bound_check(gamma, grid=None, powers=(1, 2, 3), phases=16, tol=1e-12):
    """Check ``Re phi >= 2g-1 + 2(1-g)/(1+|z|)`` for ``phi = g + (1-g)(1+w)/(1-w)``.

    The Schwarz functions sampled are ``w = e^{i theta} z**j``.
    """
    if not 0 <= gamma < 1:
        raise ParameterError(f"need 0 <= gamma < 1, got {gamma}")
    grid = grid or Grid()
    z = grid.points()
    bound = 2 * gamma - 1 + 2 * (1 - gamma) / (1 + np.abs(z))
    worst = np.full(z.shape, -np.inf)
    for j in powers:
        for theta in 2 * np.pi * np.arange(phases) / phases:
            w = np.exp(1j * theta) * z ** j
            phi = gamma + (1 - gamma) * (1 + w) / (1 - w)
            worst = np.maximum(worst, bound - phi.real)
    return _report(worst, z, grid, tol)


@dataclass(frozen=True)
class ExtremalRatio:
    """``(1 + (1-2k) z**n) / (1 - z**n)``."""

    kappa: float
    n: int = 1

    def __post_init__(self):
        if not 0 <= self.kappa < 1:
            raise ParameterError(f"need 0 <= kappa < 1, got {self.kappa}")
        if self.n < 1:
            raise ParameterError("n must be a positive integer")

    def __call__(self, z):
        w = np.asarray(z, dtype=complex) ** self.n
        return (1 + (1 - 2 * self.kappa) * w) / (1 - w)

    def taylor(self, K):
        """Coefficients ``c_1 .. c_K``."""
        c = np.zeros(K)
        c[self.n - 1:: self.n] = 2.0 * (1.0 - self.kappa)
        return c


def extremal_ratio(kappa, n=1):
    return ExtremalRatio(kappa, n)


# -- sharpness evidence ------------------------------------------------------

def sharpness_rho(p, alpha, beta, mu, A, B, m=0, N=256, grid=None, gap_tol=5e-3):
    """Extremal ``f`` with ``T^{m+1}f/T^m f = q``: the infimum of the real part
    over the sampled disk should sit in ``[rho - 1e-9, rho + gap_tol]``."""
    grid = grid or Grid()
    rho = rho_inclusion(p, alpha, beta, mu, A, B)
    op = OperatorParams(p, 1, m, alpha, beta)
    q = best_dominant_taylor(QIntegralSpec.inclusion(p, alpha, beta, mu, A, B), N - p)
    f = series_from_ratio(q[1:], op, N)
    z = grid.points()
    ratio = class_functional(f, op, 0.0, z).real
    i = np.unravel_index(np.argmin(ratio), ratio.shape)
    low = float(ratio[i])
    miss = max(rho - 1e-9 - low, low - rho - gap_tol, 0.0)
    return VerifyReport(
        passed=miss == 0.0,
        worst_violation=miss,
        witness=complex(z[i]),
        radial_samples=grid.radial,
        angular_samples=grid.angular,
        tolerance=0.0,
        details={"bound": rho, "sampled_min": low, "gap_tol": gap_tol, "truncation": N},
    )


def sharpness_radius(p, alpha, beta, mu, A, B, m=0, N=256, angular=512, inner=1e-3, outer=0.1):
    """Sign change of ``Re(class functional) - kappa`` across the radius.

    Uses the extremal ratio ``(1+(1-2k)z)/(1-z)``.  The real part must stay
    positive on the disk of radius ``R(1-inner)`` and go negative somewhere
    on the circle of radius ``min(R(1+outer), 0.999)``.
    """
    kappa = kappa_from(A, B)
    R = radius_mu_kappa(p, alpha, beta, mu, kappa)
    op = OperatorParams(p, 1, m, alpha, beta)
    f = series_from_ratio(ExtremalRatio(kappa).taylor(N - p), op, N)
    g_in = Grid(64, angular, R * (1 - inner))
    z_in = g_in.points()
    v_in = class_functional(f, op, mu, z_in).real - kappa
    r_out = min(R * (1 + outer), 0.999)
    z_out = r_out * np.exp(1j * g_in.angles())
    v_out = class_functional(f, op, mu, z_out).real - kappa
    i = np.unravel_index(np.argmin(v_in), v_in.shape)
    j = int(np.argmin(v_out))
    miss = max(0.0, -float(v_in[i])) + max(0.0, float(v_out[j]))
    witness = complex(z_in[i]) if v_in[i] <= 0 else complex(z_out[j])
    return VerifyReport(
        passed=miss == 0.0 and v_in[i] > 0 and v_out[j] < 0,
        worst_violation=miss,
        witness=witness,
        radial_samples=g_in.radial,
        angular_samples=angular,
        tolerance=0.0,
        details={"radius": R, "inner_min": float(v_in[i]), "outer_min": float(v_out[j]),
                 "outer_radius": r_out, "truncation": N},
    )


def _majorant_images(p, alpha, beta, A, B, N):
    op = OperatorParams(p, 1, 0, alpha, beta)
    K = N - p
    psi = (B - A) * B ** np.arange(K) if B != 0 else np.r_[-A, np.zeros(K - 1)]
    G = series_from_ratio(psi, op, N)
    return G, apply_theta(G, op.with_m(1)), op.scale


def _schwarz_image(c, z, g, tg, beta, S):
    phi = (z + c) / (1 + c * z)
    dphi = (1 - c * c) / (1 + c * z) ** 2
    return phi * tg + beta / S * z * dphi * g


def majorization_pair(p, alpha, beta, A, B, c, N=256):
    """Extremal images ``(T f, T g)`` for the majorization radius.

    ``G`` has ratio ``T G / G = (1-Az)/(1-Bz)``; the minorant has
    ``F = phi G`` with the disk automorphism ``phi = (z+c)/(1+cz)``, so by
    the operator identity ``T F = phi T G + (beta/S) z phi' G``.
    """
    G, TG, S = _majorant_images(p, alpha, beta, A, B, N)

    def TF(z):
        return _schwarz_image(c, z, evaluate(G, z), evaluate(TG, z), beta, S)

    return TF, (lambda z: evaluate(TG, z))


def majorization_scan(p, alpha, beta, A, B, N=256, step=1e-3, cs=None, angular=256, tol=2e-2):
    """Largest radius on which every extremal pair satisfies ``|T f| <= |T g|``.

    Compared against ``majorization_radius``; only the circle ``|z| = r`` is
    sampled since ``TF/TG`` is analytic (maximum modulus).
    """
    cs = np.arange(0.0, 0.951, 0.05) if cs is None else np.asarray(cs)
    target = majorization_radius(p, alpha, beta, A, B)
    G, TG, S = _majorant_images(p, alpha, beta, A, B, N)
    radii = np.arange(step, 0.99, step)
    ang = np.exp(2j * np.pi * np.arange(angular) / angular)
    z = radii[:, None] * ang[None, :]
    g, tg = evaluate(G, z), evaluate(TG, z)
    bound = np.abs(tg) * (1 + 1e-9)
    ok = np.ones(radii.size, dtype=bool)
    for c in cs:
        ok &= np.all(np.abs(_schwarz_image(c, z, g, tg, beta, S)) <= bound, axis=1)
    bad = np.flatnonzero(~ok)
    if bad.size == 0:
        scan = float(radii[-1])
    else:
        scan = float(radii[bad[0] - 1]) if bad[0] > 0 else 0.0
    witness = complex(radii[bad[0]]) if bad.size else 0j
    miss = abs(scan - target)
    return VerifyReport(
        passed=miss <= tol,
        worst_violation=miss,
        witness=witness,
        radial_samples=radii.size,
        angular_samples=angular,
        tolerance=tol,
        details={"scan_radius": scan, "radius": target, "truncation": N, "schwarz_params": len(cs)},
    )


def eta_extremal(p, alpha, beta, mu, A1, A2, N=4096):
    """``phi_0 = F_c(phi_1 * phi_2)`` with ``phi_j = (1+A_j z)/(1-z)``, as a series in ``z``.

    The averaging is the integral operator with ``delta = c - p`` applied to
    ``z**p phi_0``; returned as the ``PSeries`` of ``z**p phi_0``.
    """
    c0 = (alpha + p * beta) / (mu * beta)
    f1 = PSeries(p, 1, N, np.full(N - p, 1.0 + A1))
    f2 = PSeries(p, 1, N, np.full(N - p, 1.0 + A2))
    return integral_operator(hadamard(f1, f2), c0 - p)


def sharpness_eta(p, alpha, beta, mu, A1, A2, N=4096, samples=2000, r_max=0.999, tol=1e-3):
    """``phi_0`` on ``(-r_max, 0]`` stays above ``eta - tol`` and approaches it."""
    eta = eta_convolution(p, alpha, beta, mu, A1, -1.0, A2, -1.0)
    f = eta_extremal(p, alpha, beta, mu, A1, A2, N)
    x = -r_max * np.arange(samples + 1) / samples
    vals = evaluate_normalized(f, x).real
    i = int(np.argmin(vals))
    miss = max(0.0, eta - float(vals[i]))
    return VerifyReport(
        passed=miss <= tol,
        worst_violation=miss,
        witness=complex(x[i]),
        radial_samples=samples + 1,
        angular_samples=1,
        tolerance=tol,
        details={"bound": eta, "sampled_min": float(vals[i]), "truncation": N},
    )
