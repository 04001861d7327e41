"""Double-exponential (tanh-sinh) quadrature on [0, 1].

The substitution ``t = 1 / (1 + exp(-pi sinh u))`` sends the real line onto
(0, 1) with doubly-exponential decay of the weights at both ends, so
integrands with algebraic endpoint singularities such as ``t**(b-1)``,
``0 < b < 1``, are integrated without any change of variable.  ``t`` and
``1 - t`` are both formed directly from the logistic function, which keeps
full relative accuracy next to either endpoint.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NumericError

U_MAX = 6.0
# Smallest abscissa ever used; nodes never come closer than this to 0 or 1.
T_MIN = 1.0 / (1.0 + math.exp(math.pi * math.sinh(U_MAX)))


def _nodes(u):
    x = math.pi * np.sinh(u)
    t = 1.0 / (1.0 + np.exp(-x))
    tc = 1.0 / (1.0 + np.exp(x))
    w = math.pi * np.cosh(u) * t * tc
    return t, tc, w


def _weighted_sum(f, u, complement):
    t, tc, w = _nodes(u)
    vals = f(t, tc) if complement else f(t)
    vals = np.asarray(vals)
    w = w.reshape((-1,) + (1,) * (vals.ndim - 1))
    return np.sum(w * vals, axis=0)


def tanh_sinh(f, atol=1e-11, rtol=1e-13, *, complement=False, max_level=10,
              full_output=False):
    """Integrate ``f`` over [0, 1].

    ``f`` is called with a 1-d array of abscissae (and, with
    ``complement=True``, a second array holding ``1 - t`` to full precision).
    It may return an array of shape ``(len(t),)`` or ``(len(t), ...)``; the
    extra axes are integrated independently, which is how a whole batch of
    parameter values is handled in one pass.

    The step is halved until two successive estimates agree to
    ``max(atol, rtol * |I|)`` (elementwise for batched integrands).

    Returns the integral, or ``(integral, error_estimate, level)`` when
    ``full_output`` is set.
    """
    h = 0.5
    k = int(round(U_MAX / h))
    s = _weighted_sum(f, h * np.arange(-k, k + 1), complement)
    est = h * s
    err = np.inf
    for level in range(1, max_level + 1):
        h /= 2.0
        k = int(round(U_MAX / h))
        odd = h * np.arange(-k + 1, k, 2)
        s = s + _weighted_sum(f, odd, complement)
        new = h * s
        err = np.max(np.abs(new - est))
        est = new
        if err <= max(atol, rtol * np.max(np.abs(new))):
            break
    else:
        if not np.all(np.isfinite(est)):
            raise NumericError("tanh-sinh quadrature produced non-finite values")
        raise NumericError(
            f"tanh-sinh quadrature did not reach tolerance (last change {err:.3e})"
        )
    if full_output:
        return est, float(err), level
    return est
