"""Independent reference implementations used only by the tests.

None of these share code with the package: they use mpmath, scipy's
adaptive quadrature or plain loops.
"""

import math

import mpmath as mp
import numpy as np
from scipy.integrate import quad

mp.mp.dps = 30


def hyp2f1(a, b, c, z):
    return complex(mp.hyp2f1(a, b, c, z))


def hadamard_loop(fa, ga):
    """Coefficient lists -> coefficient-wise product via a python loop."""
    return [x * y for x, y in zip(fa, ga)]


def naive_eval(p, n, tail, z):
    total = z ** p
    for j, a in enumerate(tail):
        total += a * z ** (p + n + j)
    return total


def theta_loop(p, n, tail, m, alpha, beta):
    S = alpha + p * beta
    return [a * mp.mpf(alpha + (p + n + j) * beta) ** m / mp.mpf(S) ** m for j, a in enumerate(tail)]


def q_quad(beta_star, gamma_star, A, B, z, base=None):
    """Best dominant ``1/(b* Q) - g*/b*`` at real ``z`` with Q by mpmath quadrature."""
    base = beta_star + gamma_star if base is None else base
    e = beta_star * (A - B) / B

    # u = t**base removes the endpoint singularity: Q = (1/base) int_0^1 g(u**(1/base)) du
    def g(u):
        t = u ** (mp.mpf(1) / base)
        return ((1 + B * t * z) / (1 + B * z)) ** e

    Q = mp.quad(g, [0, 1]) / base
    return float(1 / (beta_star * Q) - gamma_star / beta_star)


def rho_oracle(p, alpha, beta, mu, A, B):
    bs = (alpha + p * beta) / (mu * beta)
    return q_quad(bs, 0.0, A, B, -1.0)


def tau_oracle(p, alpha, beta, delta, A, B):
    bs = (alpha + p * beta) / beta
    gs = (delta * beta - alpha) / beta
    return q_quad(bs, gs, A, B, -1.0)


def xi_power_oracle(p, alpha, beta, mu, g, A, B):
    S = alpha + p * beta
    bs = S / (mu * beta * g)
    gs = -S / (beta * g)
    q = q_quad(bs, gs, A, B, -1.0)
    return (q - mu) / (1 - mu)


def average_oracle(c, A, B, z=-1.0):
    """``c int_0^1 s^(c-1) h(sz) ds`` for ``h = (1+Aw)/(1+Bw)``, scipy quad."""
    val, _ = quad(lambda s: c * s ** (c - 1) * (1 + A * s * z) / (1 + B * s * z), 0, 1,
                  epsabs=1e-14, epsrel=1e-13, limit=200)
    return val


def eta_oracle(p, alpha, beta, mu, A1, B1, A2, B2):
    """Averaged Caratheodory lower bound at ``z = -1``."""
    c0 = (alpha + p * beta) / (mu * beta)
    g1 = (1 - A1) / (1 - B1)
    g2 = (1 - A2) / (1 - B2)
    g3 = 1 - 2 * (1 - g1) * (1 - g2)
    val, _ = quad(lambda s: c0 * s ** (c0 - 1) * (2 * g3 - 1 + 2 * (1 - g3) / (1 + s)), 0, 1,
                  epsabs=1e-14, epsrel=1e-13, limit=200)
    return val


def small_quadratic_root(a, b, c):
    """Smallest positive real root of ``a x^2 + b x + c`` by the textbook formula."""
    if a == 0:
        return -c / b
    d = math.sqrt(b * b - 4 * a * c)
    roots = [(-b - d) / (2 * a), (-b + d) / (2 * a)]
    return min(r for r in roots if r > 0)


def bisect_root(f, lo, hi, tol=1e-14):
    """Plain bisection, independent of scipy."""
    flo = f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if flo * fm <= 0:
            hi = mid
        else:
            lo, flo = mid, fm
        if hi - lo < tol:
            break
    return 0.5 * (lo + hi)


def first_root_scan(coeffs, hi=1.0, step=1e-4):
    """First sign change of an ascending-coefficient polynomial, then bisection."""
    f = lambda x: sum(c * x ** k for k, c in enumerate(coeffs))
    xs = np.arange(0.0, hi + step / 2, step)
    prev = f(xs[0])
    for a, b in zip(xs[:-1], xs[1:]):
        cur = f(b)
        if prev * cur <= 0:
            return bisect_root(f, a, b)
        prev = cur
    raise ValueError("no root")
