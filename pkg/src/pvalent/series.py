"""Truncated p-valent power series and the multiplier operators acting on them.

A series ``f(z) = z**p + sum_{k >= p+n} a_k z**k`` is stored densely: the
leading coefficient is the implicit 1 and ``tail[j]`` holds ``a_{p+n+j}``
for exponents ``p+n .. N``.  All operators act coefficient-wise, so results
are exact up to floating-point roundoff in the multipliers.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial

from .errors import ParameterError

DEFAULT_N = 64


@dataclass(frozen=True, eq=False)
class PSeries:
    """Truncated series ``z**p + a_{p+n} z**(p+n) + ... + a_N z**N``."""

    p: int
    n: int
    N: int
    tail: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.p < 1 or self.n < 1:
            raise ParameterError(f"p and n must be positive integers, got p={self.p}, n={self.n}")
        if self.N < self.p + self.n:
            raise ParameterError(f"truncation N={self.N} below first tail exponent {self.p + self.n}")
        tail = np.array(self.tail, dtype=complex).reshape(-1)
        if tail.size != self.N - self.p - self.n + 1:
            raise ParameterError(
                f"tail has {tail.size} entries, expected {self.N - self.p - self.n + 1}"
            )
        tail.flags.writeable = False
        object.__setattr__(self, "tail", tail)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def monomial(cls, p, n=1, N=DEFAULT_N):
        """The series ``z**p`` (no tail)."""
        return cls(p, n, N, np.zeros(N - p - n + 1))

    @classmethod
    def geometric(cls, p, n=1, N=DEFAULT_N):
        """Truncation of ``z**p / (1 - z)`` restricted to the gap pattern: all
        retained coefficients equal 1.  It is the identity for ``hadamard``."""
        return cls(p, n, N, np.ones(N - p - n + 1))

    @classmethod
    def from_coeffs(cls, p, n, N, coeffs):
        """Build from a mapping ``{exponent: coefficient}``.

        An entry for the exponent ``p`` must be exactly 1; exponents inside the
        gap ``p < k < p+n`` must be absent or zero.
        """
        tail = np.zeros(N - p - n + 1, dtype=complex)
        for k, a in coeffs.items():
            k = int(k)
            if k == p:
                if a != 1:
                    raise ParameterError("leading coefficient must be exactly 1")
            elif p < k < p + n:
                if a != 0:
                    raise ParameterError(f"exponent {k} lies in the gap (p, p+n)")
            elif p + n <= k <= N:
                tail[k - p - n] = a
            else:
                raise ParameterError(f"exponent {k} outside [{p}, {N}]")
        return cls(p, n, N, tail)

    @classmethod
    def random(cls, p, n, N, rng, radius=1.0):
        """Tail coefficients drawn uniformly from the disk ``|a| <= radius``."""
        size = N - p - n + 1
        mod = radius * np.sqrt(rng.uniform(0.0, 1.0, size))
        arg = rng.uniform(0.0, 2 * np.pi, size)
        return cls(p, n, N, mod * np.exp(1j * arg))

    # -- accessors ------------------------------------------------------------
    @property
    def exponents(self):
        """Exponents of the stored tail, ``p+n .. N``."""
        return np.arange(self.p + self.n, self.N + 1)

    def coeff(self, k):
        if k == self.p:
            return 1.0 + 0j
        if self.p + self.n <= k <= self.N:
            return complex(self.tail[k - self.p - self.n])
        return 0j

    def dense(self):
        """Coefficient vector indexed by exponent, ``0 .. N``."""
        c = np.zeros(self.N + 1, dtype=complex)
        c[self.p] = 1.0
        c[self.p + self.n:] = self.tail
        return c

    def normalized_dense(self):
        """Coefficients of ``f(z) / z**p``, indexed ``0 .. N-p``."""
        return self.dense()[self.p:]

    def to_polynomial(self):
        return Polynomial(self.dense())

    def with_tail(self, tail):
        return PSeries(self.p, self.n, self.N, tail)

    def truncate(self, N):
        if N > self.N:
            raise ParameterError(f"cannot extend truncation from {self.N} to {N}")
        return PSeries(self.p, self.n, N, self.tail[: N - self.p - self.n + 1])

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        return (self.p, self.n, self.N) == (other.p, other.n, other.N) and np.array_equal(
            self.tail, other.tail
        )

    __hash__ = None

    def __call__(self, z):
        return evaluate(self, z)

    # -- JSON -----------------------------------------------------------------
    def to_json(self):
        return {
            "p": self.p,
            "n": self.n,
            "N": self.N,
            "coeffs": [
                {"k": int(k), "re": float(a.real), "im": float(a.imag)}
                for k, a in zip(self.exponents, self.tail)
            ],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            p, n, N = int(obj["p"]), int(obj["n"]), int(obj["N"])
            coeffs = {
                int(e["k"]): complex(float(e.get("re", 0.0)), float(e.get("im", 0.0)))
                for e in obj.get("coeffs", [])
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise ParameterError(f"malformed series JSON: {exc}") from exc
        return cls.from_coeffs(p, n, N, coeffs)


@dataclass(frozen=True)
class OperatorParams:
    """Parameters ``(p, n, m, alpha, beta)`` of the multiplier operator.

    The coefficient of ``z**k`` is multiplied by
    ``((alpha + k beta) / (alpha + p beta))**m``.
    """

    p: int
    n: int
    m: int
    alpha: float
    beta: float

    def __post_init__(self):
        if self.p < 1 or self.n < 1:
            raise ParameterError("p and n must be positive integers")
        if int(self.m) != self.m:
            raise ParameterError(f"m must be an integer, got {self.m}")
        if not self.beta > 0:
            raise ParameterError(f"beta must be > 0, got {self.beta}")
        if not self.alpha + self.p * self.beta > 0:
            raise ParameterError(f"alpha + p*beta must be > 0, got {self.alpha + self.p * self.beta}")

    @property
    def scale(self):
        """``alpha + p beta``."""
        return self.alpha + self.p * self.beta

    def with_m(self, m):
        return OperatorParams(self.p, self.n, m, self.alpha, self.beta)

    def multipliers(self, exponents):
        """Multiplier ``((alpha + k beta) / (alpha + p beta))**m`` per exponent."""
        k = np.asarray(exponents, dtype=float)
        # integer power of a positive base; exact for small integer ratios
        return ((self.alpha + k * self.beta) / self.scale) ** int(self.m)


def ell_lambda_to_alpha_beta(p, ell, lam):
    """Map the ``(lambda, ell)`` parameters of the J operator to ``(alpha, beta)``."""
    return ell + p - p * lam, lam


def _check_compatible(f, op):
    if (f.p, f.n) != (op.p, op.n):
        raise ParameterError(
            f"operator (p={op.p}, n={op.n}) does not match series (p={f.p}, n={f.n})"
        )


def hadamard(f, g):
    """Coefficient-wise (Hadamard) product, truncated at ``min(f.N, g.N)``."""
    if (f.p, f.n) != (g.p, g.n):
        raise ParameterError(f"valence/gap mismatch: ({f.p},{f.n}) vs ({g.p},{g.n})")
    N = min(f.N, g.N)
    size = N - f.p - f.n + 1
    a, b = f.tail[:size], g.tail[:size]
    # spelled out so the product is bitwise symmetric in f and g
    re = a.real * b.real - a.imag * b.imag
    im = a.real * b.imag + a.imag * b.real
    return PSeries(f.p, f.n, N, re + 1j * im)


def apply_theta(f, op):
    """Apply the multiplier operator with parameters ``op`` to ``f``."""
    _check_compatible(f, op)
    if op.m == 0:
        return f
    return f.with_tail(f.tail * op.multipliers(f.exponents))


def theta_identity_residual(f, op):
    """Coefficient-wise residual of ``beta z (T^m f)' = (alpha+p beta) T^{m+1} f - alpha T^m f``.

    Each coefficient's discrepancy is measured relative to ``max(1, |lhs_k|)``
    so that the residual stays at roundoff scale when large ``m`` inflates the
    coefficients; the maximum over all retained exponents (including the
    leading one) is returned.
    """
    _check_compatible(f, op)
    cur = apply_theta(f, op).dense()
    nxt = apply_theta(f, op.with_m(op.m + 1)).dense()
    k = np.arange(f.N + 1)
    lhs = op.beta * k * cur
    rhs = op.scale * nxt - op.alpha * cur
    return float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(lhs))))


def integral_operator(f, delta):
    """Integral operator ``(delta+p) z**-delta int_0^z t**(delta-1) f(t) dt``.

    Coefficient ``a_{p+k}`` is scaled by ``(delta+p)/(delta+p+k)``; the
    computation goes through ``apply_theta`` with ``(m, alpha, beta) = (-1, delta, 1)``
    so both routes agree bit for bit.
    """
    if not delta > -f.p:
        raise ParameterError(f"delta must exceed -p = {-f.p}, got {delta}")
    return apply_theta(f, OperatorParams(f.p, f.n, -1, delta, 1.0))


def evaluate(f, z):
    """Evaluate a truncated series (or a numpy ``Polynomial``) at ``z``.

    Works elementwise on arrays.  Horner evaluation of the tail is done on
    ``f(z)/z**p`` and multiplied back, which keeps small ``|z|`` accurate.
    """
    if isinstance(f, Polynomial):
        return f(z)
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 0.999):
        warnings.warn("|z| > 0.999: truncation error may dominate", RuntimeWarning, stacklevel=2)
    return z ** f.p * evaluate_normalized(f, z)


def evaluate_normalized(f, z):
    """``f(z) / z**p`` evaluated by Horner's rule (value 1 at the origin)."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for a in f.tail[::-1]:
        acc = acc * z + a
    return 1.0 + acc * z ** f.n


def differentiate(f):
    """Derivative as a ``Polynomial`` (leading coefficient ``p``, not renormalized)."""
    return f.to_polynomial().deriv()


def series_from_ratio(psi, op, N):
    """Series ``f`` whose operator ratio ``T^{m+1} f / T^m f`` equals ``psi``.

    ``psi`` gives the Taylor coefficients ``c_1 .. c_{N-p}`` of the target
    ratio (a leading ``c_0 = 1`` is implied; pass a sequence starting at
    ``c_1``).  ``G = T^m f`` is built from

        beta (k - p) g_k = (alpha + p beta) sum_{j=1}^{k-p} c_j g_{k-j},  g_p = 1,

    and ``f = T^{-m} G``.  The recurrence never divides by zero.  For a gap
    index ``op.n > 1`` the coefficients ``c_1 .. c_{n-1}`` must vanish.
    """
    p, n = op.p, op.n
    K = N - p
    c = np.zeros(K + 1, dtype=complex)
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    take = min(K, psi.size)
    c[1: take + 1] = psi[:take]
    if n > 1 and np.any(c[1:n] != 0):
        raise ParameterError(f"ratio has nonzero coefficients below z**{n} for gap index n={n}")
    g = np.zeros(K + 1, dtype=complex)
    g[0] = 1.0
    ratio = op.scale / op.beta
    for j in range(1, K + 1):
        g[j] = ratio / j * np.dot(c[1: j + 1], g[j - 1:: -1])
    G = PSeries(p, n, N, g[n:])
    return apply_theta(G, op.with_m(-op.m))


__all__ = [
    "DEFAULT_N",
    "PSeries",
    "OperatorParams",
    "ell_lambda_to_alpha_beta",
    "hadamard",
    "apply_theta",
    "theta_identity_residual",
    "integral_operator",
    "evaluate",
    "evaluate_normalized",
    "differentiate",
    "series_from_ratio",
]
