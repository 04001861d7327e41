import json

import numpy as np
import pytest

from pvalent.bounds import ClassParams, eta_convolution, rho_inclusion
from pvalent.errors import NormalizationError, ParameterError, PoleError
from pvalent.hypergeom import QIntegralSpec, best_dominant_q, best_dominant_taylor
from pvalent.radii import majorization_radius
from pvalent.series import OperatorParams, PSeries, evaluate, series_from_ratio
from pvalent.subordination import (
    Grid,
    Region,
    caratheodory_lower_bound_check,
    class_functional,
    class_membership,
    eta_extremal,
    extremal_ratio,
    is_subordinate,
    majorization_check,
    majorization_pair,
    majorization_scan,
    sharpness_eta,
    sharpness_radius,
    sharpness_rho,
    target_region,
)

SMALL = Grid(16, 128)


def mobius(A, B):
    return lambda z: (1 + A * z) / (1 + B * z)


def boundary_image(A, B, count=10_000):
    w = np.exp(2j * np.pi * np.arange(count) / count)
    with np.errstate(divide="ignore", invalid="ignore"):
        return (1 + A * w) / (1 + B * w)


# -- regions -------------------------------------------------------------------------

def test_halfplane():
    reg = target_region(1, -1)
    assert reg.shape == "halfplane" and reg.re_bound == 0


@pytest.mark.parametrize("A,B,center,radius", [(0.5, 0.0, 1.0, 0.5), (0.5, -0.5, 5 / 3, 4 / 3)])
def test_disk_against_boundary_map(A, B, center, radius):
    reg = target_region(A, B)
    assert reg.center == pytest.approx(center, abs=1e-15)
    assert reg.radius == pytest.approx(radius, abs=1e-15)
    d = np.abs(boundary_image(A, B) - center)
    assert d.min() == pytest.approx(radius, abs=1e-6) and d.max() == pytest.approx(radius, abs=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_region_boundary_invariant(seed):
    rng = np.random.default_rng(seed)
    B = rng.uniform(-0.99, 0.9)
    A = rng.uniform(B + 1e-2, 1)
    reg = target_region(A, B)
    assert np.max(np.abs(reg.exterior_margin(boundary_image(A, B)))) < 1e-12
    A = rng.uniform(-0.9, 1)
    w = boundary_image(A, -1, 10_001)
    w = w[np.abs(w) < 1e6]
    assert np.max(np.abs(w.real - (1 - A) / 2)) < 1e-9


def test_region_validation():
    with pytest.raises(ParameterError):
        target_region(0.2, 0.2)
    with pytest.raises(ParameterError):
        Region("disk", 1.0, 0.0)


# -- subordination ---------------------------------------------------------------------

def test_dominant_is_subordinate_to_itself():
    rep = is_subordinate(mobius(0.5, -0.5), 0.5, -0.5)
    assert rep.passed and rep.worst_violation == 0


def test_small_perturbation_subordinate():
    A = 0.6
    assert is_subordinate(lambda z: 1 + A / 2 * z, A, 0.0)


def test_larger_a_fails_near_boundary():
    rep = is_subordinate(mobius(0.9, -0.5), 0.5, -0.5)
    assert not rep.passed
    assert abs(rep.witness) == pytest.approx(0.995)
    # worst point on the image disk is in the direction z = +1
    assert rep.witness.real > 0.99


def test_normalization_required():
    with pytest.raises(NormalizationError):
        is_subordinate(lambda z: 2 + z, 0.5, -0.5)


def test_report_json_shape():
    rep = is_subordinate(mobius(0.5, -0.5), 0.5, -0.5, SMALL)
    obj = json.loads(json.dumps(rep.to_json()))
    assert set(obj) >= {"pass", "worst_violation", "witness", "radial_samples", "angular_samples", "tolerance"}
    assert obj["label"] == "evidence"
    assert obj["pass"] == (obj["worst_violation"] <= obj["tolerance"])


# -- class membership --------------------------------------------------------------------

def test_monomial_in_every_class():
    f = PSeries.monomial(2, 1, 16)
    op = OperatorParams(2, 1, 1, 0.3, 1.1)
    for A, B in [(1, -1), (0.5, 0.0), (0.2, 0.1)]:
        assert class_membership(f, op, ClassParams(0.7, A, B), SMALL).passed


def test_q_extremal_is_member():
    p, alpha, beta, mu, A, B = 2, 0.5, 1.0, 0.7, -0.1, -0.5
    N = 256
    q = best_dominant_taylor(QIntegralSpec.inclusion(p, alpha, beta, mu, A, B), N - p)
    op = OperatorParams(p, 1, 1, alpha, beta)
    f = series_from_ratio(q[1:], op, N)
    rep = class_membership(f, op, ClassParams(mu, A, B))
    assert rep.passed and rep.worst_violation <= 1e-6


def test_q_extremal_functional_equals_target():
    p, alpha, beta, mu, A, B = 1, 0.2, 1.3, 0.9, 0.1, -0.5
    N = 200
    q = best_dominant_taylor(QIntegralSpec.inclusion(p, alpha, beta, mu, A, B), N - p)
    op = OperatorParams(p, 1, -2, alpha, beta)
    f = series_from_ratio(q[1:], op, N)
    z = 0.7 * np.exp(1j * np.linspace(0, 2 * np.pi, 33))
    assert np.allclose(class_functional(f, op, mu, z), mobius(A, B)(z), atol=1e-10)


def test_larger_a_ratio_not_member():
    A, B, Ap = 0.3, -0.5, 0.8
    op = OperatorParams(1, 1, 0, 0.0, 1.0)
    c = (Ap - B) * (-B) ** np.arange(127)
    f = series_from_ratio(c, op, 128)
    rep = class_membership(f, op, ClassParams(0.0, A, B), SMALL)
    assert not rep.passed


def test_pole_detected():
    # z + 2 z^2 vanishes at z = -1/2, which the grid hits exactly
    f = PSeries.from_coeffs(1, 1, 2, {2: 2.0})
    op = OperatorParams(1, 1, 0, 0.0, 1.0)
    with pytest.raises(PoleError) as err:
        class_membership(f, op, ClassParams(0.0, 1, -1), Grid(radial=1, angular=2, r_max=0.5))
    assert err.value.witness == pytest.approx(-0.5)


# -- majorization -------------------------------------------------------------------------

def test_majorization_self():
    g = PSeries.random(2, 1, 20, np.random.default_rng(0), 0.5)
    rep = majorization_check(g, g, 0.9, SMALL)
    assert rep.passed and rep.worst_violation == 0


def test_majorization_scaled():
    g = PSeries.random(2, 1, 20, np.random.default_rng(1), 0.5)
    f = lambda z: 0.9 * evaluate(g, z)
    for r in (0.1, 0.5, 0.95):
        assert majorization_check(f, g, r, SMALL).passed


def test_majorization_koebe_pair():
    # g = z/(1-z)^2 truncated, f = g (z + c)/(1 + c z): radius bound is 2 - sqrt 3 for derivatives
    TF, TG = majorization_pair(1, 0.0, 1.0, 1.0, -1.0, 0.9, N=256)
    r0 = 2 - np.sqrt(3)
    assert majorization_check(TF, TG, r0 - 0.01, SMALL).passed
    assert not majorization_check(TF, TG, r0 + 0.05, SMALL).passed


def test_majorization_mismatch():
    with pytest.raises(ParameterError):
        majorization_check(PSeries.monomial(1), PSeries.monomial(2), 0.5)
    with pytest.raises(ParameterError):
        majorization_check(PSeries.monomial(1), PSeries.monomial(1), 1.0)


# -- Caratheodory lower bound --------------------------------------------------------------

def test_caratheodory_equality_case():
    r = np.linspace(0.01, 0.99, 50)
    z = -r
    phi = (1 + z) / (1 - z)
    assert np.allclose(phi.real, -1 + 2 / (1 + r), atol=1e-15)


@pytest.mark.parametrize("gamma", [0.0, 0.25, 0.5, 0.9])
def test_caratheodory_sweep(gamma):
    assert caratheodory_lower_bound_check(gamma, SMALL).passed


def test_caratheodory_gamma_near_one():
    rep = caratheodory_lower_bound_check(1 - 1e-12, SMALL)
    assert rep.passed


def test_caratheodory_range():
    with pytest.raises(ParameterError):
        caratheodory_lower_bound_check(1.0)


# -- extremal ratio ------------------------------------------------------------------------

def test_extremal_ratio_values():
    assert extremal_ratio(0.5)(0.0) == 1
    z = np.array([0.3, -0.2j])
    assert np.allclose(extremal_ratio(0, 1)(z), (1 + z) / (1 - z))
    assert np.allclose(extremal_ratio(0.3, 2).taylor(6), [0, 1.4, 0, 1.4, 0, 1.4])


def test_extremal_ratio_right_half_plane():
    z = 0.999 * np.exp(2j * np.pi * np.arange(1, 1000) / 1000)
    assert np.all(extremal_ratio(0, 1)(z).real > 0)


def test_extremal_ratio_domain():
    with pytest.raises(ParameterError):
        extremal_ratio(1.0)


# -- sharpness evidence ---------------------------------------------------------------------

def test_sharpness_rho_interior_case():
    rep = sharpness_rho(2, 0.5, 1.0, 0.7, -0.1, -0.5)
    assert rep.passed
    assert rep.witness.real == pytest.approx(-0.995, abs=1e-12)
    assert rep.details["sampled_min"] >= rep.details["bound"] - 1e-9


def test_sharpness_rho_koebe_case():
    # here the gap only closes as r -> 1; the sampled minimum is still q(-r_max)
    grid = Grid(r_max=0.9)
    rep = sharpness_rho(1, 0, 1, 1, 1, -1, grid=grid)
    low = rep.details["sampled_min"]
    assert low >= rho_inclusion(1, 0, 1, 1, 1, -1)
    spec = QIntegralSpec.inclusion(1, 0, 1, 1, 1, -1)
    assert low == pytest.approx(best_dominant_q(spec, -0.9).real, abs=1e-9)
    assert rep.witness.real == pytest.approx(-0.9)


@pytest.mark.parametrize("args", [(1, 0, 1, 0.5, 0.5, -0.5), (2, 0.3, 1.2, 1.0, 0.2, -0.9), (1, 0.5, 2.0, 0.2, 0.6, 0.2)])
def test_sharpness_radius(args):
    rep = sharpness_radius(*args)
    assert rep.passed, rep.details
    assert rep.details["inner_min"] > 0 > rep.details["outer_min"]


def test_sharpness_radius_witness_on_negative_axis():
    rep = sharpness_radius(1, 0, 1, 0.5, 0.5, -0.5)
    op = OperatorParams(1, 1, 0, 0.0, 1.0)
    f = series_from_ratio(extremal_ratio(1 / 3).taylor(255), op, 256)
    R = rep.details["radius"]
    assert class_functional(f, op, 0.5, np.array([-R])).real[0] - 1 / 3 == pytest.approx(0, abs=1e-10)


@pytest.mark.parametrize("args", [(1, 0, 1, 1, -1), (2, 0.5, 1.5, 0.6, -0.4)])
def test_majorization_scan(args):
    rep = majorization_scan(*args)
    assert rep.passed
    assert abs(rep.details["scan_radius"] - majorization_radius(*args)) <= 2e-2


def test_eta_extremal_series():
    f = eta_extremal(1, 0, 1, 1, 1, 1, N=50)
    # (1+z)/(1-z) * (1+z)/(1-z) coefficientwise = 1 + 4 sum z^k, averaged with c = 1
    assert np.allclose(f.tail, 4 / np.arange(2, 51))


@pytest.mark.parametrize("args", [(1, 0, 1, 1, 1, 1), (2, 0.5, 1.0, 0.6, 0.3, 0.8)])
def test_sharpness_eta(args):
    rep = sharpness_eta(*args)
    eta = eta_convolution(args[0], args[1], args[2], args[3], args[4], -1, args[5], -1)
    assert rep.passed
    assert rep.details["sampled_min"] >= eta - 1e-3
    assert rep.details["sampled_min"] - eta < 5e-3
