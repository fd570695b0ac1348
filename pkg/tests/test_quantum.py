"""Quantum-layer tests: variances, the uncertainty product and the
transformation coefficients.

All routes to the product — direct formula, sqrt(varQ*varP), and the
|mu+nu||mu-nu| form — must coincide; normalization |mu|^2 - |nu|^2 = 1 is an
algebraic identity and is tested as such.
"""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tdo import ermakov, minimum, models, quantum
from tdo.errors import UnitsError

SQ2 = 2.0 ** -0.5


def make_state(t, sigma, sigma_dot, k=0.0, F=0.0):
    return ermakov.ErmakovState(t=t, sigma=sigma, sigma_dot=sigma_dot,
                                theta=0.0, k=k, F=F)


def test_harmonic_ground_product_is_minimal():
    m = models.harmonic()
    rep = quantum.quadratures(m, make_state(0.0, SQ2, 0.0), hbar=1.0)
    assert rep.product == pytest.approx(0.5, abs=1e-15)
    assert rep.varQ == pytest.approx(0.5, rel=1e-14)
    assert rep.varP == pytest.approx(0.5, rel=1e-14)


def test_turning_point_of_oscillating_branch_saturates():
    # at sigma' = 0 and M = 0 the product is exactly hbar/2 whatever sigma
    m = models.harmonic()
    sigma = math.sqrt((2.0 - math.sqrt(3.0)) / 2.0)
    rep = quantum.quadratures(m, make_state(0.0, sigma, 0.0))
    assert rep.product == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("gamma,t", [(1.0, 0.0), (1.0, 1.2), (0.3, 2.0)])
def test_damped_model_saturates_on_drift_condition(gamma, t):
    # sigma' = M sigma / 2 forces the product to hbar/2 exactly
    m = models.kanai_caldirola(gamma=gamma)
    M = float(models.damping_coefficient(m, t))
    sigma = 0.8
    rep = quantum.quadratures(m, make_state(t, sigma, 0.5 * M * sigma))
    assert rep.product == 0.5


def test_product_routes_agree_on_damped_trajectory():
    m = models.kanai_caldirola(omega0=1.0, gamma=1.0)
    states = ermakov.integrate_ep(m, 0.25, (0.9, 0.1), 0.0, 3.0, n_out=100)
    ref = quantum.default_reference(m, 0.0)
    for s in states:
        rep = quantum.quadratures(m, s)
        pair = quantum.bogolubov(m, s, ref)
        assert quantum.uncertainty_via_bogolubov(pair) == pytest.approx(
            rep.product, rel=1e-10)
        assert math.sqrt(rep.varQ * rep.varP) == pytest.approx(
            rep.product, rel=1e-10)


def test_normalization_and_balance_moduli_on_damped_model():
    m = models.kanai_caldirola(omega0=1.0, gamma=1.0)
    states = ermakov.integrate_ep(m, 0.25, (0.9, 0.1), 0.0, 3.0, n_out=60)
    ref = quantum.default_reference(m, 0.0)
    for s in states:
        pair = quantum.bogolubov(m, s, ref)
        assert abs(pair.mu) ** 2 - abs(pair.nu) ** 2 == pytest.approx(
            1.0, abs=1e-10)
        mu2, nu2 = quantum.moduli_from_balance(m, s, ref)
        assert mu2 == pytest.approx(abs(pair.mu) ** 2, abs=1e-8)
        assert nu2 == pytest.approx(abs(pair.nu) ** 2, abs=1e-8)


def test_self_reference_identity():
    m = models.harmonic()
    pair = quantum.bogolubov(m, make_state(0.0, SQ2, 0.0), (1.0, 1.0))
    assert pair.mu == pytest.approx(1.0, abs=1e-14)
    assert abs(pair.nu) < 1e-14


def test_minimum_model_gives_identity_transformation():
    m = models.exp_frequency()
    mm = minimum.minimum_model(m)
    ref = quantum.default_reference(m, 0.0)
    for t in np.linspace(0.0, 2.0, 21):
        s = minimum.sigma_minimum(mm, t, 0.0)
        pair = quantum.bogolubov(m, s, ref)
        assert abs(pair.mu - 1.0) < 1e-12
        assert abs(pair.nu) < 1e-12


def test_uncertainty_via_bogolubov_identity():
    pair = quantum.BogolubovPair(mu=1.0 + 0j, nu=0.0 + 0j, reference=(1.0, 1.0))
    assert quantum.uncertainty_via_bogolubov(pair, hbar=1.0) == 0.5


def test_uncertainty_via_bogolubov_squeeze():
    # real squeeze parameters: |mu+nu||mu-nu| = e^r e^-r = 1
    r = 0.5
    pair = quantum.BogolubovPair(mu=complex(math.cosh(r)),
                                 nu=complex(math.sinh(r)),
                                 reference=(1.0, 1.0))
    assert quantum.uncertainty_via_bogolubov(pair, hbar=1.0) == pytest.approx(
        0.5, rel=1e-14)


@settings(max_examples=80, deadline=None)
@given(sigma=st.floats(0.05, 5.0), sigma_dot=st.floats(-3.0, 3.0),
       gamma=st.floats(-1.5, 1.5))
def test_bound_and_eta_modulus(sigma, sigma_dot, gamma):
    m = models.kanai_caldirola(gamma=gamma) if gamma != 0.0 else models.harmonic()
    rep = quantum.quadratures(m, make_state(0.5, sigma, sigma_dot))
    assert rep.product >= 0.5 - 1e-12
    assert abs(rep.eta) == pytest.approx(abs(rep.xi), rel=1e-12)
    assert math.sqrt(rep.varQ * rep.varP) == pytest.approx(rep.product,
                                                           rel=1e-11)


@settings(max_examples=40, deadline=None)
@given(sigma=st.floats(0.1, 3.0), sigma_dot=st.floats(-2.0, 2.0))
def test_mu_nu_construction_identities(sigma, sigma_dot):
    m = models.kanai_caldirola()
    s = make_state(0.7, sigma, sigma_dot)
    ref = (0.9, 1.3)
    rep = quantum.quadratures(m, s)
    pair = quantum.bogolubov(m, s, ref)
    mass = float(m.m(s.t))
    m0, w0 = ref
    assert cmath.isclose(pair.mu + pair.nu,
                         math.sqrt(2.0 * mass / (m0 * w0)) * rep.eta,
                         rel_tol=1e-12, abs_tol=1e-12)
    assert cmath.isclose(pair.mu - pair.nu,
                         math.sqrt(2.0 * m0 * w0 / mass) * sigma,
                         rel_tol=1e-12, abs_tol=1e-12)


def test_vacuum_expectations_minimum_model():
    # c = 1: <Q^2> = 1, <P^2> = 1/4, <H> = omega/2 for all times
    m = models.exp_frequency(omega0=1.0, gamma0=1.0, c=1.0)
    mm = minimum.minimum_model(m)
    assert mm.c == pytest.approx(1.0, rel=1e-12)
    for t in np.linspace(0.0, 2.0, 9):
        s = minimum.sigma_minimum(mm, t, 0.0)
        q2, p2, energy = quantum.vacuum_expectations(m, s, hbar=1.0)
        assert q2 == pytest.approx(1.0, rel=1e-12)
        assert p2 == pytest.approx(0.25, rel=1e-12)
        assert energy == pytest.approx(0.5 * float(m.omega(t)), rel=1e-9)


def test_vacuum_energy_harmonic_ground():
    m = models.harmonic()
    _, _, energy = quantum.vacuum_expectations(m, make_state(0.0, SQ2, 0.0))
    assert energy == pytest.approx(0.5, rel=1e-14)


def test_units_errors():
    m = models.harmonic()
    s = make_state(0.0, SQ2, 0.0)
    with pytest.raises(UnitsError):
        quantum.quadratures(m, s, hbar=0.0)
    with pytest.raises(UnitsError):
        quantum.bogolubov(m, s, (0.0, 1.0))
    with pytest.raises(UnitsError):
        quantum.uncertainty_via_bogolubov(
            quantum.BogolubovPair(1.0, 0.0, (1.0, 1.0)), hbar=-1.0)


def test_oscillating_saturation_gap_report():
    # worst-case excess is (hbar/2)(k/omega0 - 1); verified against a scan
    gaps = quantum.oscillating_saturation_gap(1.0, [1.0, 2.0, 3.0])
    assert gaps[1.0] == pytest.approx(0.0, abs=1e-15)
    assert gaps[2.0] == pytest.approx(0.5, rel=1e-13)
    m = models.harmonic()
    worst = 0.0
    for t in np.linspace(0.0, math.pi, 400):
        s, sd = ermakov.sigma_oscillating(1.0, 2.0, 0.0, t)
        rep = quantum.quadratures(m, make_state(t, float(s), float(sd)))
        worst = max(worst, rep.product - 0.5)
    assert worst == pytest.approx(gaps[2.0], rel=1e-4)
