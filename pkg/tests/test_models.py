"""Model catalog tests.

Every expected number is either a definition (constant models), a hand
evaluation of the coefficient formulas M = m'/m and
Omega^2 = omega^2 - M'/2 - M^2/4, or a finite-difference cross-check of the
analytic derivatives.
"""

import math

import numpy as np
import pytest

from tdo import models
from tdo.errors import DomainError, ParameterError


def fd(f, t, h=1e-6):
    return (float(f(t + h)) - float(f(t - h))) / (2.0 * h)


def test_catalog_has_exactly_five_models():
    cat = models.catalog()
    assert [m.name for m in cat] == [
        "harmonic", "kanai_caldirola", "exp_frequency", "tsquared",
        "bessel_type"]


def test_harmonic_is_constant():
    m = models.harmonic(m0=1.0, omega0=1.0)
    assert float(m.m(2.0)) == 1.0
    assert float(m.omega(2.0)) == 1.0
    c = models.coefficients(m, 1.7)
    assert c.M == 0.0
    assert c.Omega2 == 1.0


def test_kanai_caldirola_mass_is_exponential():
    m = models.kanai_caldirola(m0=1.0, gamma=1.0)
    assert float(m.m(1.0)) == pytest.approx(math.e, rel=1e-15)


def test_kanai_caldirola_coefficients():
    # direct evaluation with M' = 0: Omega^2 = omega0^2 - gamma^2/4
    m = models.kanai_caldirola(omega0=1.0, gamma=1.0)
    for t in (-1.0, 0.0, 2.5):
        c = models.coefficients(m, t)
        assert c.M == pytest.approx(1.0, abs=1e-14)
        assert c.Omega2 == 0.75


def test_tsquared_coefficients():
    # m0=1, c^2=1/2: omega(1) = 1, M(1) = 2, Omega^2(1) = omega^2 = 1
    m = models.tsquared(m0=1.0, c=2.0 ** -0.5)
    c = models.coefficients(m, 1.0)
    assert c.M == pytest.approx(2.0, rel=1e-14)
    assert c.Omega2 == pytest.approx(1.0, rel=1e-12)


def test_exp_frequency_product_constant():
    m = models.exp_frequency(omega0=1.0, gamma0=1.0, c=2.0 ** -0.5)
    ts = np.linspace(0.0, 3.0, 50)
    prod = np.asarray(m.m(ts)) * np.asarray(m.omega(ts))
    assert np.max(np.abs(prod - 1.0)) < 1e-12


def test_exp_frequency_rejects_nonpositive_gamma0():
    with pytest.raises(ParameterError):
        models.exp_frequency(gamma0=0.0)
    with pytest.raises(ParameterError):
        models.exp_frequency(gamma0=-0.5)


@pytest.mark.parametrize("name,window", [
    ("harmonic", (0.0, 2.0)),
    ("kanai_caldirola", (0.0, 2.0)),
    ("exp_frequency", (0.0, 2.0)),
    ("tsquared", (0.5, 2.5)),
    ("bessel_type", (0.1, 1.5)),
])
def test_analytic_derivatives_match_finite_differences(name, window):
    model = models.get_model(name)
    ts = np.linspace(*window, 102)[1:-1]
    for t in ts:
        h = 1e-6 * (1.0 + abs(t))
        md = float(model.m_dot(t))
        assert abs(fd(model.m, t, h) - md) <= 1e-6 * (1.0 + abs(md))
        wd = float(model.omega_dot(t))
        assert abs(fd(model.omega, t, h) - wd) <= 1e-6 * (1.0 + abs(wd))


def test_omega2_dot_shortcut_matches_finite_difference():
    for model in models.catalog():
        lo, hi = {"tsquared": (0.6, 2.0), "bessel_type": (0.2, 1.2)}.get(
            model.name, (0.0, 2.0))
        for t in np.linspace(lo, hi, 17):
            num = (models.omega2(model, t + 1e-5) -
                   models.omega2(model, t - 1e-5)) / 2e-5
            assert models.omega2_dot(model, t) == pytest.approx(
                num, rel=1e-5, abs=1e-7)


def test_domain_guards():
    m = models.tsquared()
    with pytest.raises(DomainError):
        models.coefficients(m, 0.0)
    with pytest.raises(DomainError):
        models.eom_residual(m, lambda t: 0.0, lambda t: 0.0, lambda t: 0.0, -1.0)


def test_unknown_model_name():
    with pytest.raises(ParameterError):
        models.get_model("no_such_model")


def test_zero_trajectory_has_zero_residual():
    m = models.harmonic()
    z = lambda t: 0.0
    assert models.eom_residual(m, z, z, z, 1.23) == 0.0


def test_tsquared_closed_form_trajectory():
    # q = cos(1/(2 m0 c^2 t)) with m0 c^2 = 1/2
    m = models.tsquared(m0=1.0, c=2.0 ** -0.5)
    q, dq, d2q = models.tsquared_solution(m0=1.0, c=2.0 ** -0.5, c1=1.0, c2=0.0)
    for t in (0.5, 1.0, 2.0):
        assert abs(models.eom_residual(m, q, dq, d2q, t)) < 1e-9


def test_exp_frequency_closed_form_trajectory():
    m = models.exp_frequency(omega0=1.0, gamma0=1.0)
    q, dq, d2q = models.exp_frequency_solution(omega0=1.0, gamma0=1.0,
                                               c1=0.4, c2=1.3)
    for t in np.linspace(0.0, 2.0, 41):
        assert abs(models.eom_residual(m, q, dq, d2q, t)) < 1e-9


def test_bessel_type_product_is_constant():
    m = models.bessel_type(order=10)
    ts = np.linspace(0.1, 1.5, 80)
    prod = np.asarray(m.m(ts)) * np.asarray(m.omega(ts))
    assert np.max(np.abs(prod / prod[0] - 1.0)) < 1e-9


# --- tabulated models -------------------------------------------------------

def _write_table(path, model, lo, hi, n=60):
    ts = np.linspace(lo, hi, n)
    lines = ["t,m,omega"]
    for t in ts:
        lines.append(f"{t:.12g},{float(model.m(t)):.12g},"
                     f"{float(model.omega(t)):.12g}")
    path.write_text("\n".join(lines) + "\n")


def test_tabulated_model_roundtrip(tmp_path):
    src = models.kanai_caldirola(omega0=1.0, gamma=0.5)
    csv_path = tmp_path / "model.csv"
    _write_table(csv_path, src, 0.0, 2.0)
    tab = models.tabulated_from_csv(csv_path)
    # relaxed tolerance for interpolated derivatives
    for t in np.linspace(0.2, 1.8, 20):
        md = float(src.m_dot(t))
        assert abs(float(tab.m_dot(t)) - md) <= 1e-4 * (1.0 + abs(md))
        assert float(tab.omega(t)) == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(DomainError):
        models.coefficients(tab, 5.0)


def test_tabulated_model_validation(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("x,y,z\n0,1,1\n1,1,1\n2,1,1\n3,1,1\n")
    with pytest.raises(ParameterError):
        models.tabulated_from_csv(p)
    p.write_text("t,m,omega\n0,1,1\n1,1,1\n2,1,1\n")
    with pytest.raises(ParameterError):
        models.tabulated_from_csv(p)  # too few rows
    p.write_text("t,m,omega\n0,1,1\n1,1,1\n1,1,1\n2,1,1\n")
    with pytest.raises(ParameterError):
        models.tabulated_from_csv(p)  # not strictly increasing
    p.write_text("t,m,omega\n0,1,1\n1,-1,1\n2,1,1\n3,1,1\n")
    with pytest.raises(ParameterError):
        models.tabulated_from_csv(p)  # nonpositive mass
