"""Deterministic verification suites behind the `verify` command.

Every check pits a closed form against an independent route (direct
integration, quadrature, exact rational recursion, library reference) and
reports the worst error against a pinned tolerance.  No randomness enters
anywhere, so repeated runs produce byte-identical reports.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import bessel, ermakov, minimum, models, quantum, series


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    max_err: float
    tol: float

    def to_json_dict(self):
        return {"name": self.name, "pass": self.passed,
                "max_err": self.max_err, "tol": self.tol}


def _check(name, max_err, tol):
    return Check(name=name, passed=bool(max_err <= tol),
                 max_err=float(max_err), tol=float(tol))


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


# ---------------------------------------------------------------------------
# models

def _fd_derivative(f, t, h):
    return (f(t + h) - f(t - h)) / (2.0 * h)


_MODEL_WINDOWS = {
    "harmonic": (0.0, 2.0),
    "kanai_caldirola": (0.0, 2.0),
    "exp_frequency": (0.0, 2.0),
    "tsquared": (0.5, 2.5),
    "bessel_type": (0.1, 1.5),
}


def suite_models():
    checks = []
    for model in models.catalog():
        lo, hi = _MODEL_WINDOWS[model.name]
        ts = np.linspace(lo, hi, 102)[1:-1]  # interior points
        worst = 0.0
        for t in ts:
            h = 1e-6 * (1.0 + abs(t))
            for f, fd in ((model.m, model.m_dot), (model.omega, model.omega_dot)):
                approx = _fd_derivative(lambda s: float(f(s)), t, h)
                exact = float(fd(t))
                worst = max(worst, abs(approx - exact) / (1.0 + abs(exact)))
        checks.append(_check(f"{model.name}: analytic derivatives vs finite "
                             "differences", worst, 1e-6))

    me = models.exp_frequency()
    ts = np.linspace(0.0, 2.0, 101)
    prod = np.asarray(me.m(ts)) * np.asarray(me.omega(ts))
    checks.append(_check("exp_frequency: m*omega constant",
                         float(np.max(np.abs(prod / prod[0] - 1.0))), 1e-12))

    mh = models.harmonic()
    err = max(abs(models.omega2(mh, t) - mh.params["omega0"] ** 2)
              for t in np.linspace(-3.0, 3.0, 21))
    checks.append(_check("harmonic: Omega^2 == omega0^2 exactly", err, 0.0))
    mk = models.kanai_caldirola()
    target = mk.params["omega0"] ** 2 - 0.25 * mk.params["gamma"] ** 2
    err = max(abs(models.omega2(mk, t) - target)
              for t in np.linspace(-3.0, 3.0, 21))
    checks.append(_check("kanai_caldirola: Omega^2 == omega0^2 - gamma^2/4 "
                         "exactly", err, 0.0))

    # analytic Omega^2 shortcuts agree with the generic expression
    worst = 0.0
    for model in models.catalog():
        lo, hi = _MODEL_WINDOWS[model.name]
        for t in np.linspace(lo + 0.05, hi, 40):
            generic = (model.omega(t) ** 2
                       - 0.5 * (model.m_ddot(t) / model.m(t)
                                - (model.m_dot(t) / model.m(t)) ** 2)
                       - 0.25 * (model.m_dot(t) / model.m(t)) ** 2)
            worst = max(worst, _rel(float(models.omega2(model, t)), float(generic)))
    checks.append(_check("catalog: Omega^2 shortcut vs generic expression",
                         worst, 1e-10))

    q, dq, d2q = models.tsquared_solution(m0=1.0, c=2.0 ** -0.5)
    mt = models.tsquared(m0=1.0, c=2.0 ** -0.5)
    err = max(abs(models.eom_residual(mt, q, dq, d2q, t)) for t in (0.5, 1.0, 2.0))
    checks.append(_check("tsquared: closed-form trajectory satisfies the "
                         "equation of motion", err, 1e-9))
    q, dq, d2q = models.exp_frequency_solution(c1=1.0, c2=0.7)
    err = max(abs(models.eom_residual(me, q, dq, d2q, t))
              for t in np.linspace(0.0, 2.0, 41))
    checks.append(_check("exp_frequency: closed-form trajectory satisfies "
                         "the equation of motion", err, 1e-9))
    return checks


# ---------------------------------------------------------------------------
# ermakov

def _min_init(model, t0, c):
    m0 = float(model.m(t0))
    return c * math.sqrt(m0), 0.5 * c * float(model.m_dot(t0)) / math.sqrt(m0)


def suite_ermakov():
    checks = []
    mh = models.harmonic()

    # closed form vs direct integration, constant branch
    st = ermakov.integrate_ep(mh, 0.25, (2.0 ** -0.5, 0.0), 0.0, 20.0)
    err = max(_rel(s.sigma, 2.0 ** -0.5) for s in st)
    checks.append(_check("harmonic constant branch vs integration (rel)",
                         err, 1e-6))

    # oscillating branch, kconst = 2
    s0, sd0 = ermakov.sigma_oscillating(1.0, 2.0, 0.0, 0.0)
    st = ermakov.integrate_ep(mh, 0.25, (float(s0), float(sd0)), 0.0, 20.0)
    err = max(_rel(s.sigma, float(ermakov.sigma_oscillating(1.0, 2.0, 0.0, s.t)[0]))
              for s in st)
    checks.append(_check("harmonic oscillating branch vs integration (rel)",
                         err, 1e-6))

    # hyperbolic branch of the damped model with negative Omega^2
    mk = models.kanai_caldirola(omega0=0.3, gamma=1.0)
    L = math.sqrt(0.25 - 0.09)
    c1, c2 = ermakov.fit_hyperbolic(L, 1.0, 0.0, 0.0)
    st_h = ermakov.integrate_ep(mk, 0.25, (1.0, 0.0), 0.0, 3.0)
    err = max(_rel(s.sigma, float(ermakov.sigma_hyperbolic(L, c1, c2, s.t)[0]))
              for s in st_h)
    checks.append(_check("damped hyperbolic branch vs integration (rel)",
                         err, 1e-6))

    # superposition closed form satisfies the auxiliary equation
    pair = ermakov.harmonic_basis(1.0)
    comb = ermakov.oscillating_combination(1.0, 2.0, 0.3)
    err = max(abs(float(ermakov.pinney_residual(pair, comb, lambda t: 1.0, t)))
              for t in np.linspace(0.0, 10.0, 101))
    checks.append(_check("superposition form: auxiliary-equation residual",
                         err, 1e-8))
    hpair = ermakov.hyperbolic_basis(L)
    hcomb = ermakov.hyperbolic_combination(L, c1, c2)
    err = max(abs(float(ermakov.pinney_residual(hpair, hcomb,
                                                lambda t: -L * L, t)))
              for t in np.linspace(0.0, 3.0, 61))
    checks.append(_check("hyperbolic superposition: auxiliary-equation "
                         "residual", err, 1e-8))

    # Wronskian constancy
    err = max(_rel(float(pair.wronskian(t)), pair.W0)
              for t in np.linspace(0.0, 20.0, 201))
    checks.append(_check("basis Wronskian drift (rel)", err, 1e-8))

    # conserved k over 20 periods on constant-Omega models
    st = ermakov.integrate_ep(mh, 0.25, (float(s0), float(sd0)), 0.0,
                              20.0 * math.pi, n_out=401)
    err = max(abs(s.k - st[0].k) for s in st)
    checks.append(_check("harmonic: conserved k drift over 20 periods",
                         err, 1e-8))
    mk2 = models.kanai_caldirola(omega0=1.0, gamma=1.0)
    Om = math.sqrt(0.75)
    st = ermakov.integrate_ep(mk2, 0.25, (1.0, 0.0), 0.0, 20.0 * math.pi / Om,
                              n_out=401)
    err = max(abs(s.k - st[0].k) for s in st)
    checks.append(_check("kanai_caldirola: conserved k drift over 20 periods",
                         err, 1e-8))

    # generalized balance with co-integrated F on time-dependent Omega
    me = models.exp_frequency()
    st = ermakov.integrate_ep(me, 0.25, (1.0, 0.3), 0.0, 2.0)
    err = max(abs(s.k - st[0].k) for s in st)
    checks.append(_check("exp_frequency: balance constant with co-integrated "
                         "F", err, 1e-7))
    mb = models.bessel_type()
    st = ermakov.integrate_ep(mb, 0.25, (0.3, 0.2), 0.1, 0.8)
    err = max(abs(s.k - st[0].k) for s in st)
    checks.append(_check("bessel_type: balance constant with co-integrated F",
                         err, 1e-7))

    # phases: closed form vs integrated theta, all six cases
    err = 0.0
    st = ermakov.integrate_ep(mh, 0.25, (2.0 ** -0.5, 0.0), 0.0, 20.0)
    err = abs(ermakov.phase_closed_form("harmonic_const", {"omega0": 1.0},
                                        0.0, 20.0) - st[-1].theta)
    checks.append(_check("phase: constant branch", err, 1e-6))
    st = ermakov.integrate_ep(mh, 0.25, (float(s0), float(sd0)), 0.0, 20.0)
    err = abs(ermakov.phase_closed_form(
        "harmonic_oscillating", {"omega0": 1.0, "kconst": 2.0, "c1": 0.0},
        0.0, 20.0) - st[-1].theta)
    checks.append(_check("phase: oscillating branch (branch-corrected "
                         "arctan)", err, 1e-6))
    err = abs(ermakov.phase_closed_form(
        "kc_hyperbolic", {"omega0": 0.3, "gamma": 1.0, "c1": c1, "c2": c2},
        0.0, 3.0) - st_h[-1].theta)
    checks.append(_check("phase: hyperbolic branch", err, 1e-6))

    mme = minimum.minimum_model(me)
    st = ermakov.integrate_ep(me, 0.25, _min_init(me, 0.0, mme.c), 0.0, 1.0)
    err = abs(ermakov.phase_closed_form(
        "exp_frequency", {"omega0": 1.0, "gamma0": 1.0}, 0.0, 1.0)
        - st[-1].theta)
    checks.append(_check("phase: exp_frequency minimal branch", err, 1e-6))
    mt = models.tsquared()
    mmt = minimum.minimum_model(mt)
    st = ermakov.integrate_ep(mt, 0.25, _min_init(mt, 1.0, mmt.c), 1.0, 2.0)
    err = abs(ermakov.phase_closed_form(
        "tsquared", {"m0": 1.0, "c": 1.0}, 1.0, 2.0) - st[-1].theta)
    checks.append(_check("phase: tsquared minimal branch", err, 1e-6))
    mmb = minimum.minimum_model(mb)
    st = ermakov.integrate_ep(mb, 0.25, _min_init(mb, 0.5, mmb.c), 0.5, 0.8)
    sseries = series.build_series(1.0, 2.0, 1.0, mb.params["order"])
    err = abs(ermakov.phase_closed_form(
        "bessel_series", {"series": sseries}, 0.5, 0.8) - st[-1].theta)
    checks.append(_check("phase: bessel-type series branch", err, 1e-6))

    # theta must never decrease
    worst = 0.0
    for states in (st, st_h):
        th = np.array([s.theta for s in states])
        worst = max(worst, float(np.max(np.maximum(0.0, -np.diff(th)))))
    checks.append(_check("theta nondecreasing along trajectories", worst, 0.0))
    return checks


# ---------------------------------------------------------------------------
# quantum / bogolubov

def _catalog_trajectories():
    """One representative trajectory per catalog model, 200 samples each."""
    out = []
    mh = models.harmonic()
    s0, sd0 = ermakov.sigma_oscillating(1.0, 2.0, 0.0, 0.0)
    out.append((mh, ermakov.integrate_ep(mh, 0.25, (float(s0), float(sd0)),
                                         0.0, 20.0, n_out=200), 0.0))
    mk = models.kanai_caldirola()
    out.append((mk, ermakov.integrate_ep(mk, 0.25, (0.9, 0.1), 0.0, 3.0,
                                         n_out=200), 0.0))
    me = models.exp_frequency()
    mme = minimum.minimum_model(me)
    out.append((me, ermakov.integrate_ep(me, 0.25, _min_init(me, 0.0, mme.c),
                                         0.0, 2.0, n_out=200), 0.0))
    mt = models.tsquared()
    mmt = minimum.minimum_model(mt)
    out.append((mt, ermakov.integrate_ep(mt, 0.25, _min_init(mt, 1.0, mmt.c),
                                         1.0, 3.0, n_out=200), 1.0))
    mb = models.bessel_type()
    mmb = minimum.minimum_model(mb)
    out.append((mb, ermakov.integrate_ep(mb, 0.25, _min_init(mb, 0.1, mmb.c),
                                         0.1, 0.8, n_out=200), 0.1))
    return out


def suite_quantum():
    checks = []
    norm_err = bound_gap = route_err = ident_err = 0.0
    for model, states, t0 in _catalog_trajectories():
        ref = quantum.default_reference(model, t0)
        for s in states:
            rep = quantum.quadratures(model, s)
            pair = quantum.bogolubov(model, s, ref)
            norm_err = max(norm_err,
                           abs(abs(pair.mu) ** 2 - abs(pair.nu) ** 2 - 1.0))
            bound_gap = max(bound_gap, 0.5 - rep.product)
            via_bogo = quantum.uncertainty_via_bogolubov(pair)
            via_var = math.sqrt(rep.varQ * rep.varP)
            route_err = max(route_err, _rel(via_bogo, rep.product),
                            _rel(via_var, rep.product),
                            _rel(via_bogo, via_var))
            m = float(model.m(s.t))
            m0, w0 = ref
            ident_err = max(
                ident_err,
                abs(pair.mu + pair.nu - math.sqrt(2.0 * m / (m0 * w0)) * rep.eta),
                abs(pair.mu - pair.nu - math.sqrt(2.0 * m0 * w0 / m) * s.sigma))
    checks.append(_check("normalization |mu|^2 - |nu|^2 = 1 along catalog "
                         "trajectories", norm_err, 1e-10))
    checks.append(_check("uncertainty product >= hbar/2", bound_gap, 1e-12))
    checks.append(_check("product route equivalence (pairwise rel)",
                         route_err, 1e-10))
    checks.append(_check("mu+nu and mu-nu construction identities",
                         ident_err, 1e-12))

    # balance-route moduli vs direct moduli (constant Omega and co-integrated F)
    worst = 0.0
    for model, states, t0 in _catalog_trajectories()[:3]:
        ref = quantum.default_reference(model, t0)
        for s in states:
            pair = quantum.bogolubov(model, s, ref)
            mu2, nu2 = quantum.moduli_from_balance(model, s, ref)
            worst = max(worst, abs(mu2 - abs(pair.mu) ** 2),
                        abs(nu2 - abs(pair.nu) ** 2))
    checks.append(_check("moduli via balance identity vs direct moduli",
                         worst, 1e-8))
    return checks


# ---------------------------------------------------------------------------
# minimum

def _min_model_cases():
    return [
        ("harmonic", models.harmonic(), (0.0, 2.0)),
        ("exp_frequency", models.exp_frequency(), (0.0, 2.0)),
        ("tsquared", models.tsquared(), (1.0, 3.0)),
        ("bessel_type", models.bessel_type(), (0.1, 0.8)),
    ]


def suite_minimum():
    checks = []
    prod_err = mu_err = nu_err = vac_err = energy_err = resc_err = 0.0
    mass_res = 0.0
    for name, model, (lo, hi) in _min_model_cases():
        mm = minimum.minimum_model(model, t0=lo, t1=hi)
        states = minimum.sigma_minimum_trajectory(mm, np.linspace(lo, hi, 60))
        ref = quantum.default_reference(model, lo)
        m0 = float(model.m(lo))
        for s in states:
            rep = quantum.quadratures(model, s)
            prod_err = max(prod_err, abs(rep.product - 0.5))
            pair = quantum.bogolubov(model, s, ref)
            mu_err = max(mu_err, abs(pair.mu - 1.0))
            nu_err = max(nu_err, abs(pair.nu))
            q2, p2, energy = quantum.vacuum_expectations(model, s)
            vac_err = max(vac_err, _rel(q2, mm.c ** 2),
                          _rel(p2, 0.25 / mm.c ** 2))
            energy_err = max(energy_err,
                             _rel(energy, 0.5 * float(model.omega(s.t))))
            resc_err = max(resc_err,
                           _rel(energy * float(model.m(s.t)) / m0,
                                0.5 * float(model.omega(lo))))
        mass_res = max(mass_res, float(np.max(np.abs(
            minimum.mass_constraint_residual(mm, np.linspace(lo, hi, 60))))))
    checks.append(_check("minimal branch: product == hbar/2", prod_err, 1e-10))
    checks.append(_check("minimal branch: |mu - 1|", mu_err, 1e-9))
    checks.append(_check("minimal branch: |nu|", nu_err, 1e-9))
    checks.append(_check("vacuum <Q^2>, <P^2> constants (rel)", vac_err, 1e-10))
    checks.append(_check("vacuum energy = hbar*omega/2 (rel)", energy_err, 1e-9))
    checks.append(_check("rescaled energy m(t)<H>/m0 constant (rel)",
                         resc_err, 1e-9))
    checks.append(_check("mass-form auxiliary residual on minimal branch",
                         mass_res, 1e-8))

    rep = minimum.check_criterion(models.exp_frequency())
    checks.append(_check("criterion holds for exp_frequency",
                         0.0 if rep.is_minimum else 1.0, 0.0))
    rep = minimum.check_criterion(models.kanai_caldirola())
    checks.append(_check("criterion rejects kanai_caldirola",
                         0.0 if not rep.is_minimum else 1.0, 0.0))

    # quadratic growth of the product under a sigma' perturbation
    mh = models.harmonic()
    mmh = minimum.minimum_model(mh)
    base = minimum.sigma_minimum(mmh, 0.5, 0.0)
    worst = 0.0
    for eps in (1e-3, 1e-4):
        pert = ermakov.ErmakovState(t=base.t, sigma=base.sigma,
                                    sigma_dot=base.sigma_dot + eps,
                                    theta=base.theta, k=base.k, F=base.F)
        gap = quantum.quadratures(mh, pert).product - 0.5
        worst = max(worst, abs(gap / (base.sigma ** 2 * eps ** 2) - 1.0))
    checks.append(_check("product grows quadratically away from the minimum",
                         worst, 1e-4))
    return checks


# ---------------------------------------------------------------------------
# series

def suite_series(order=8):
    from fractions import Fraction

    checks = []
    s10 = series.build_series(1.0, 2.0, 1.0, 10)
    pf = series.product_form_ratios(2.0, 1.0, 10)
    exact = all(pf[k] == s10.ratios[k] for k in range(10))
    checks.append(_check("ratio recursion == closed product form (exact, "
                         "k <= 10)", 0.0 if exact else 1.0, 0.0))

    err = max(abs(s10.a[0] - 1.1547005383792517),
              abs(s10.a[1] + 0.08247860988423227),
              abs(s10.a[2] - 0.0032557346006933784))
    checks.append(_check("leading coefficients a1, a3, a5", err, 1e-12))

    res = series.symbolic_residual(s10)
    checks.append(_check("symbolic residual vanishes in retained powers",
                         max(abs(r) for r in res), 1e-12))

    rec = series.reciprocal_identity_coefficients(s10)
    exact = rec[0] == 0 and all(r == 0 for r in rec[1:])
    checks.append(_check("reciprocal series identity (exact)",
                         0.0 if exact else 1.0, 0.0))

    exact = all(series.determinant_tilde(s10, k) == s10.tilde_ratios[k]
                for k in range(7))
    checks.append(_check("determinant form of reciprocal coefficients "
                         "(k <= 6)", 0.0 if exact else 1.0, 0.0))

    vals = [series.alpha_numeric_check(series.build_series(1.0, 2.0, 1.0, n),
                                       0.1, 0.8) for n in range(3, order + 1)]
    ratio = max(b / a for a, b in zip(vals, vals[1:]))
    checks.append(_check("constraint residual strictly decreasing with "
                         "order", ratio, 1.0 - 1e-12))
    checks.append(_check(f"constraint residual at order {order} on "
                         "[0.1, 0.8]", vals[-1], 1e-6))

    s = series.build_series(1.0, 2.0, 1.0, order)
    from scipy.integrate import quad
    th = series.theta_series(s, 0.5, 0.8)
    ref, _ = quad(lambda t: 2.0 / float(s.alpha(t)), 0.5, 0.8,
                  epsabs=1e-13, epsrel=1e-13)
    checks.append(_check("phase series vs adaptive quadrature", abs(th - ref),
                         1e-8))

    # shooting comparison: integrate the constraint as an ODE from t ~ 0
    from scipy.integrate import solve_ivp
    w0_sq, mu_sq, lam_sq = 1.0, 1.0, 4.0

    def rhs(t, y):
        al, ald = y
        return [ald, (ald * ald + 4.0 * w0_sq
                      - al * al * (mu_sq + lam_sq / (t * t))) / (2.0 * al)]

    eps = 1e-3
    sol = solve_ivp(rhs, (eps, 0.5), [s.a1 * eps, s.a1], rtol=1e-12,
                    atol=1e-14, dense_output=True)
    grid = np.linspace(0.1, 0.5, 41)
    err = float(np.max(np.abs(sol.sol(grid)[0] - s.alpha(grid))))
    checks.append(_check("series vs shooting solution of the constraint",
                         err, 1e-6))

    s_lin = series.build_series(1.0, 2.0, 0.0, order)
    err = series.alpha_numeric_check(s_lin, 0.1, 5.0)
    checks.append(_check("mu_s = 0 linear case: residual at any order",
                         err, 1e-12))
    th = series.theta_series(s_lin, 0.5, 0.8)
    err = abs(th - 2.0 / s_lin.a1 * math.log(0.8 / 0.5))
    checks.append(_check("mu_s = 0 phase reduces to a logarithm", err, 1e-14))

    err = series.power_law_check(1.0, math.sqrt(3.0) / 4.0,
                                 np.linspace(0.2, 5.0, 101))
    checks.append(_check("power-law trajectories t^(+-1/4) satisfy their "
                         "equation of motion", err, 1e-10))

    # oscillatory approximation: returned pair satisfies the induced dynamics
    ts = np.linspace(0.0, 1.0, 2001)
    alpha, q = series.large_k0_approx(1.0, 2.0, 1.0, 1.0, 0.0, ts)
    h = ts[1] - ts[0]
    dq = np.gradient(q, h, edge_order=2)
    d2q = np.gradient(dq, h, edge_order=2)
    amp = math.sqrt(1.0 - 1.0 / 4.0)
    alpha_dot = 2.0 * 2.0 * amp * np.cos(2.0 * 2.0 * ts)
    res = d2q + (alpha_dot / alpha) * dq + (1.0 / alpha) ** 2 * q
    err = float(np.max(np.abs(res[5:-5])))
    checks.append(_check("oscillatory approximation: trajectory residual "
                         "(loose)", err, 0.05))
    return checks


# ---------------------------------------------------------------------------
# bessel

def suite_bessel():
    checks = []
    xs = np.linspace(0.1, 20.0, 500)
    worst = 0.0
    for rho in (0.0, 1.0 / 3.0, 0.5, 1.0):
        worst = max(worst, float(np.max(np.abs(
            bessel.defining_ode_residual(rho, xs)))))
    checks.append(_check("evaluator satisfies the defining equation "
                         "(rho in {0, 1/3, 1/2, 1})", worst, 1e-8))

    try:
        from scipy.special import jv as scipy_jv
    except ImportError:  # pragma: no cover
        scipy_jv = None
    if scipy_jv is not None:
        worst = 0.0
        for rho in (0.0, 1.0 / 3.0, 0.5, 1.0):
            mine = bessel.jv(rho, xs)[0]
            worst = max(worst, float(np.max(np.abs(mine - scipy_jv(rho, xs)))))
        checks.append(_check("evaluator matches the library Bessel "
                             "reference", worst, 1e-10))

    err = series.bessel_reduction_check(1.0, 1.0, 0.5, np.linspace(0.5, 10.0, 200))
    checks.append(_check("reduced trajectory sqrt(t) Z_0 satisfies its "
                         "equation", err, 1e-7))
    err = series.bessel_reduction_check(1.0, 1.0, 0.0, np.linspace(0.5, 10.0, 200))
    checks.append(_check("rho = 1/2 elementary fallback", err, 1e-10))
    return checks


# ---------------------------------------------------------------------------

SUITES = {
    "models": suite_models,
    "ermakov": suite_ermakov,
    "quantum": suite_quantum,
    "bogolubov": suite_quantum,
    "minimum": suite_minimum,
    "series": suite_series,
    "bessel": suite_bessel,
}


def run_suite(name, order=8):
    """Run one suite (or 'all') and return the JSON-ready report dict."""
    if name == "all":
        checks = []
        for suite_name in ("models", "ermakov", "quantum", "minimum",
                           "series", "bessel"):
            for c in _run_one(suite_name, order):
                checks.append(Check(name=f"{suite_name}: {c.name}",
                                    passed=c.passed, max_err=c.max_err,
                                    tol=c.tol))
    else:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        checks = _run_one(name, order)
    return {
        "suite": name,
        "checks": [c.to_json_dict() for c in checks],
        "pass": all(c.passed for c in checks),
    }


def _run_one(name, order):
    fn = SUITES[name]
    if fn is suite_series:
        return fn(order=order)
    return fn()
