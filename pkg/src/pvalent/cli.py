"""Command-line front end.  JSON goes to stdout, diagnostics to stderr.

Exit status: 0 success/pass, 1 failed check or numerical failure,
2 usage or parameter error, 3 theorem hypotheses violated (without --force).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from . import bounds, radii, subordination
from .bounds import ClassParams, OutsideHypothesesWarning
from .errors import HypothesisError, NumericError, ParameterError, PValentError
from .hypergeom import gauss_2f1
from .series import (
    OperatorParams,
    PSeries,
    apply_theta,
    ell_lambda_to_alpha_beta,
    integral_operator,
    theta_identity_residual,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_HYPOTHESIS = 0, 1, 2, 3

BOUND_NAMES = ("rho", "rho_tilde", "tau", "xi", "sigma", "xi_f", "eta_conv", "rho_convexity")
RADIUS_NAMES = ("mu_kappa", "cor234", "power", "linear", "majorization", "majorization_closed")
CHECKS = (
    "identity", "subordination", "class", "majorization", "caratheodory",
    "sharpness-rho", "sharpness-radius", "sharpness-majorization", "sharpness-eta",
)


class UsageError(Exception):
    pass


def _complex(text):
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from exc


def _add_params(ap, names):
    for name in names:
        kind = int if name in ("p", "n", "m", "t", "N") else float
        ap.add_argument(f"--{name}", type=kind, dest=name.replace("-", "_"))


def _operator_args(ap):
    _add_params(ap, ("p", "n", "m", "alpha", "beta", "ell", "lambda"))


def build_parser():
    ap = argparse.ArgumentParser(prog="pvalent", description="p-valent operator bounds and verifiers")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomly sampled inputs")
    sub = ap.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hyp2f1", help="evaluate the Gauss hypergeometric function")
    h.add_argument("--a", type=float, required=True)
    h.add_argument("--b", type=float, required=True)
    h.add_argument("--c", type=float, required=True)
    h.add_argument("--z", type=_complex, required=True)

    b = sub.add_parser("bound", help="closed-form sharp bound")
    b.add_argument("--name", choices=BOUND_NAMES, required=True)
    b.add_argument("--force", action="store_true", help="evaluate outside theorem hypotheses")
    _operator_args(b)
    _add_params(b, ("mu", "gamma", "delta", "A", "B", "A1", "B1", "A2", "B2", "eta", "t"))

    r = sub.add_parser("radius", help="radius constant")
    r.add_argument("--name", choices=RADIUS_NAMES, required=True)
    r.add_argument("--variant", choices=("theorem", "printed"), default="theorem")
    _operator_args(r)
    _add_params(r, ("mu", "gamma", "A", "B", "kappa", "eta", "rho"))

    a = sub.add_parser("apply", help="apply the multiplier or integral operator to a series")
    a.add_argument("--input", help="series JSON file (default stdin)")
    _operator_args(a)
    _add_params(a, ("delta",))

    v = sub.add_parser("verify", help="sampled numerical check, prints a report")
    v.add_argument("--check", choices=CHECKS, required=True)
    v.add_argument("--input", help="series JSON file (default stdin where needed)")
    v.add_argument("--input-g", dest="input_g", help="majorant series JSON file")
    _operator_args(v)
    _add_params(v, ("mu", "gamma", "A", "B", "A1", "A2", "phi-A", "phi-B", "r", "N", "kappa"))
    v.add_argument("--radial", type=int, default=64)
    v.add_argument("--angular", type=int, default=512)
    v.add_argument("--r-max", dest="r_max", type=float, default=0.995)
    return ap


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing parameter(s): " + ", ".join("--" + m for m in missing))
    return [getattr(args, n) for n in names]


def _alpha_beta(args):
    """``(alpha, beta)`` from either the direct flags or ``--ell/--lambda``."""
    direct = args.alpha is not None or args.beta is not None
    mapped = args.ell is not None or args.__dict__.get("lambda") is not None
    if direct and mapped:
        raise UsageError("give either --alpha/--beta or --ell/--lambda, not both")
    if mapped:
        (p,) = _need(args, "p")
        ell, lam = args.ell, args.__dict__.get("lambda")
        if ell is None or lam is None:
            raise UsageError("--ell and --lambda go together")
        return ell_lambda_to_alpha_beta(p, ell, lam)
    return _need(args, "alpha", "beta")


def _kappa(args):
    if args.kappa is not None:
        if args.A is not None or args.B is not None:
            raise UsageError("give either --kappa or --A/--B, not both")
        return args.kappa
    A, B = _need(args, "A", "B")
    return bounds.kappa_from(A, B)


def _read_series(path):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid series JSON: {exc}") from exc
    return PSeries.from_json(obj)


def _value(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def cmd_hyp2f1(args):
    return {"value": _value(gauss_2f1(args.a, args.b, args.c, args.z))}, True


def cmd_bound(args):
    name = args.name
    kw = {"force": args.force}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", OutsideHypothesesWarning)
        if name == "rho":
            p, mu, A, B = _need(args, "p", "mu", "A", "B")
            value = bounds.rho_inclusion(p, *_alpha_beta(args), mu, A, B, **kw)
        elif name == "rho_tilde":
            p, A, B = _need(args, "p", "A", "B")
            value = bounds.rho_tilde(p, *_alpha_beta(args), A, B, **kw)
        elif name == "tau":
            p, delta, A, B = _need(args, "p", "delta", "A", "B")
            value = bounds.tau_integral_preserve(p, *_alpha_beta(args), delta, A, B, **kw)
        elif name == "xi":
            p, mu, gamma, A, B = _need(args, "p", "mu", "gamma", "A", "B")
            value = bounds.xi_power(p, *_alpha_beta(args), mu, gamma, A, B, **kw)
        elif name == "sigma":
            p, n, mu, A, B = _need(args, "p", "n", "mu", "A", "B")
            value = bounds.sigma_coeff(p, n, *_alpha_beta(args), mu, A, B, args.t or 1)
        elif name == "xi_f":
            p, n, delta, mu, A, B = _need(args, "p", "n", "delta", "mu", "A", "B")
            value = bounds.xi_F(p, n, delta, mu, A, B, args.t or 1)
        elif name == "eta_conv":
            p, mu, A1, B1, A2, B2 = _need(args, "p", "mu", "A1", "B1", "A2", "B2")
            value = bounds.eta_convolution(p, *_alpha_beta(args), mu, A1, B1, A2, B2)
        else:
            p, eta = _need(args, "p", "eta")
            value = bounds.rho_convexity(p, eta, **kw)
    for w in caught:
        print(f"warning: outside theorem hypotheses: {w.message}", file=sys.stderr)
    return {"name": name, "value": float(value), "hypotheses_ok": not caught}, True


def cmd_radius(args):
    name = args.name
    if name == "mu_kappa":
        p, mu = _need(args, "p", "mu")
        value = radii.radius_mu_kappa(p, *_alpha_beta(args), mu, _kappa(args))
    elif name == "cor234":
        p, mu, rho = _need(args, "p", "mu", "rho")
        value = radii.radius_from_rho(p, mu, rho)
    elif name == "power":
        p, n, mu, gamma = _need(args, "p", "n", "mu", "gamma")
        value = radii.radius_power(p, n, *_alpha_beta(args), mu, gamma, _kappa(args))
    elif name == "linear":
        p, n, mu = _need(args, "p", "n", "mu")
        value = radii.radius_linear(p, n, *_alpha_beta(args), mu)
    elif name == "majorization":
        p, A, B = _need(args, "p", "A", "B")
        value = radii.majorization_radius(p, *_alpha_beta(args), A, B, args.variant)
    else:
        p, eta = _need(args, "p", "eta")
        value = radii.majorization_radius_closed(p, eta)
    return {"name": name, "value": float(value)}, True


def _op_for(f, args, m=None):
    alpha, beta = _alpha_beta(args)
    m = args.m if m is None else m
    if m is None:
        raise UsageError("missing parameter(s): --m")
    return OperatorParams(f.p, f.n, m, alpha, beta)


def cmd_apply(args):
    f = _read_series(args.input)
    if args.delta is not None:
        if args.m is not None or args.alpha is not None or args.beta is not None:
            raise UsageError("--delta selects the integral operator; drop --m/--alpha/--beta")
        return integral_operator(f, args.delta).to_json(), True
    return apply_theta(f, _op_for(f, args)).to_json(), True


def _grid(args):
    return subordination.Grid(args.radial, args.angular, args.r_max)


def cmd_verify(args):
    check = args.check
    if check == "identity":
        if args.input is not None:
            f = _read_series(args.input)
        else:
            p, n = _need(args, "p", "n")
            rng = np.random.default_rng(args.seed)
            f = PSeries.random(p, n, args.N or 32, rng)
        op = _op_for(f, args)
        res = theta_identity_residual(f, op)
        tol = 1e-12
        rep = subordination.VerifyReport(res <= tol, res, 0j, f.N + 1, 1, tol,
                                         details={"seed": args.seed, "N": f.N})
    elif check == "subordination":
        A, B, a, b = _need(args, "A", "B", "phi_A", "phi_B")

        def phi(z):
            return (1 + a * z) / (1 + b * z)

        rep = subordination.is_subordinate(phi, A, B, _grid(args))
    elif check == "class":
        f = _read_series(args.input)
        mu, A, B = _need(args, "mu", "A", "B")
        rep = subordination.class_membership(f, _op_for(f, args), ClassParams(mu, A, B), _grid(args))
    elif check == "majorization":
        (r,) = _need(args, "r")
        if args.input_g is None:
            raise UsageError("majorization needs --input-g")
        f = _read_series(args.input)
        g = _read_series(args.input_g)
        rep = subordination.majorization_check(f, g, r, _grid(args))
    elif check == "caratheodory":
        (gamma,) = _need(args, "gamma")
        rep = subordination.caratheodory_lower_bound_check(gamma, _grid(args))
    elif check == "sharpness-rho":
        p, mu, A, B = _need(args, "p", "mu", "A", "B")
        rep = subordination.sharpness_rho(p, *_alpha_beta(args), mu, A, B, m=args.m or 0,
                                          N=args.N or 256, grid=_grid(args))
    elif check == "sharpness-radius":
        p, mu, A, B = _need(args, "p", "mu", "A", "B")
        rep = subordination.sharpness_radius(p, *_alpha_beta(args), mu, A, B, m=args.m or 0,
                                             N=args.N or 256, angular=args.angular)
    elif check == "sharpness-majorization":
        p, A, B = _need(args, "p", "A", "B")
        rep = subordination.majorization_scan(p, *_alpha_beta(args), A, B, N=args.N or 256)
    else:
        p, mu, A1, A2 = _need(args, "p", "mu", "A1", "A2")
        rep = subordination.sharpness_eta(p, *_alpha_beta(args), mu, A1, A2, N=args.N or 4096)
    print(f"{check}: {'pass' if rep.passed else 'FAIL'} "
          f"(worst violation {rep.worst_violation:.3g}, tolerance {rep.tolerance:g})", file=sys.stderr)
    return rep.to_json(), rep.passed


COMMANDS = {
    "hyp2f1": cmd_hyp2f1,
    "bound": cmd_bound,
    "radius": cmd_radius,
    "apply": cmd_apply,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, ok = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"error: {exc} (use --force to evaluate anyway)", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericError, PValentError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(json.dumps(out) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
