"""Odd power-series solution of the nonlinear scale-function constraint.

The scale function alpha(t) of the Bessel-type oscillator model obeys

    2 a a'' - a'^2 - 4 w0^2 + a^2 (mu_s^2 + lam^2 / t^2) = 0,

solved by alpha = sum_k a_{2k+1} t^{2k+1} with a1 = 2 w0 / sqrt(lam^2 - 1)
and the ratio recursion

    a_{2k+1} / a_{2k-1} = -mu_s^2 (2k-1) / (2k [(4k^2 - 1) + lam^2]).

Coefficient arithmetic is exact (fractions on the a1-normalized ratios) up
to order 12 and floating point beyond; all structural identities
(convolution system, reciprocal series, determinant form) are available
for verification.
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bessel
from .errors import ConvergenceWarning, NonPositiveAlpha, ParameterError

_RATIONAL_ORDER_CAP = 12


@dataclass(frozen=True)
class AlphaSeries:
    """Truncated odd series for alpha(t) plus the reciprocal even series.

    `order` counts retained odd coefficients: a = (a1, a3, ..., a_{2*order-1}).
    `a_tilde` holds the reciprocal coefficients of a1*t/alpha(t), so
    a_tilde[0] == 1 and omega(t) = (omega0/(a1*t)) * sum a_tilde[k] t^{2k}.
    `ratios` / `tilde_ratios` keep the a1-normalized coefficients, exact
    fractions when the order allows.
    """

    omega0: float
    lam: float
    mu_s: float
    order: int
    a: tuple
    a_tilde: tuple
    ratios: tuple
    tilde_ratios: tuple

    @property
    def a1(self):
        return self.a[0]

    def _powsum(self, t, weight):
        t = np.asarray(t, dtype=float)
        t2 = t * t
        acc = np.zeros_like(t)
        for k in range(self.order - 1, -1, -1):
            acc = acc * t2 + weight(k) * self.a[k]
        return acc

    def alpha(self, t):
        return np.asarray(t, dtype=float) * self._powsum(t, lambda k: 1.0)

    def alpha_dot(self, t):
        return self._powsum(t, lambda k: 2 * k + 1.0)

    def alpha_ddot(self, t):
        t = np.asarray(t, dtype=float)
        # d2/dt2 sum a_k t^(2k+1) = sum (2k+1)(2k) a_k t^(2k-1)
        t2 = t * t
        acc = np.zeros_like(t)
        for k in range(self.order - 1, 0, -1):
            acc = acc * t2 + (2 * k + 1.0) * (2 * k) * self.a[k]
        return acc * t

    def alpha_d3(self, t):
        t = np.asarray(t, dtype=float)
        t2 = t * t
        acc = np.zeros_like(t)
        for k in range(self.order - 1, 0, -1):
            acc = acc * t2 + (2 * k + 1.0) * (2 * k) * (2 * k - 1.0) * self.a[k]
        return acc

    def radius_guard(self):
        """Conservative truncation-accuracy window (inf when mu_s == 0)."""
        return math.inf if self.mu_s == 0.0 else 2.0 / abs(self.mu_s)

    def full_coefficients(self):
        """Coefficients (a0, a1, a2, ...) with the even zeros made explicit."""
        out = [0.0] * (2 * self.order)
        for k, ak in enumerate(self.a):
            out[2 * k + 1] = ak
        return out

    def to_json_dict(self):
        return {
            "omega0": self.omega0,
            "lambda": self.lam,
            "mu_s": self.mu_s,
            "order": self.order,
            "a": list(self.a),
            "a_tilde": list(self.a_tilde),
        }


@dataclass(frozen=True)
class ConvolutionTriple:
    """Power-by-power coefficients of alpha'^2 (b), alpha^2 (c), alpha*alpha'' (d)."""

    b: tuple
    c: tuple
    d: tuple


def _ratio_step(k, lam_sq, mu_sq):
    # a_{2k+1} / a_{2k-1}
    return -mu_sq * (2 * k - 1) / (2 * k * ((4 * k * k - 1) + lam_sq))


def build_series(omega0, lam, mu_s, order):
    """Construct the truncated alpha series and its reciprocal.

    Requires lam**2 > 1 (reality of a1) and order >= 1.  The leading
    coefficient is a1 = 2*omega0/sqrt(lam**2 - 1); higher odd coefficients
    follow from the ratio recursion; even ones vanish identically.
    """
    if not isinstance(order, int) or order < 1:
        raise ParameterError("order must be an integer >= 1")
    if lam * lam <= 1.0:
        raise ParameterError("lam**2 must exceed 1 for a real leading coefficient")
    if omega0 <= 0.0:
        raise ParameterError("omega0 must be positive")

    exact = order <= _RATIONAL_ORDER_CAP
    if exact:
        lam_sq = Fraction(lam) * Fraction(lam)
        mu_sq = Fraction(mu_s) * Fraction(mu_s)
        one = Fraction(1)
    else:
        lam_sq = lam * lam
        mu_sq = mu_s * mu_s
        one = 1.0

    ratios = [one]
    for k in range(1, order):
        ratios.append(ratios[-1] * _ratio_step(k, lam_sq, mu_sq))

    # reciprocal of 1 + r1 x + r2 x^2 + ... (x = t^2)
    tilde = [one]
    for k in range(1, order):
        acc = ratios[1] * tilde[k - 1]
        for j in range(2, k + 1):
            acc += ratios[j] * tilde[k - j]
        tilde.append(-acc)

    a1 = 2.0 * omega0 / math.sqrt(lam * lam - 1.0)
    a = tuple(a1 * float(r) for r in ratios)
    a_tilde = tuple(float(q) for q in tilde)
    return AlphaSeries(float(omega0), float(lam), float(mu_s), order,
                       a, a_tilde, tuple(ratios), tuple(tilde))


def product_form_ratios(lam, mu_s, order):
    """a_{2k+1}/a1 via the closed product over odd j in 3..2k+1.

    Independent of the ratio recursion; used to confirm the two published
    coefficient formulas agree.  Exact fractions.
    """
    lam_sq = Fraction(lam) * Fraction(lam)
    mu_sq = Fraction(mu_s) * Fraction(mu_s)
    out = [Fraction(1)]
    for k in range(1, order):
        prod = Fraction(1)
        for j in range(3, 2 * k + 2, 2):
            prod *= Fraction(2 * (k + 1) - j) / ((2 * k + 3 - j) * (j * (j - 2) + lam_sq))
        out.append(Fraction((-1) ** k) * mu_sq ** k * prod)
    return out


def convolution_triple(a):
    """Coefficients of alpha'^2, alpha^2 and alpha*alpha'' for alpha = sum a_k t^k.

    b_k = sum_j (j+1)(k-j+1) a_{j+1} a_{k-j+1},  c_k = sum_j a_j a_{k-j},
    d_k = sum_j (2+k-j)(1+k-j) a_j a_{k+2-j}; sums run over the retained
    indices only, so entries are exact up to the truncation degree.
    """
    n = len(a)  # a_0 .. a_{n-1}
    deg = n - 1

    def get(i):
        return a[i] if 0 <= i < n else None

    b = []
    for k in range(0, 2 * deg - 1):
        acc = 0 * a[0]
        for j in range(0, k + 1):
            x, y = get(j + 1), get(k - j + 1)
            if x is not None and y is not None:
                acc += (j + 1) * (k - j + 1) * x * y
        b.append(acc)
    c = []
    for k in range(0, 2 * deg + 1):
        acc = 0 * a[0]
        for j in range(0, k + 1):
            x, y = get(j), get(k - j)
            if x is not None and y is not None:
                acc += x * y
        c.append(acc)
    d = []
    for k in range(0, 2 * deg - 1):
        acc = 0 * a[0]
        for j in range(0, k + 1):
            x, y = get(j), get(k + 2 - j)
            if x is not None and y is not None:
                acc += (2 + k - j) * (1 + k - j) * x * y
        d.append(acc)
    return ConvolutionTriple(tuple(b), tuple(c), tuple(d))


def residual_coefficients(a, four_omega0_sq, mu_sq, lam_sq, n_powers):
    """Power coefficients of the alpha constraint, starting at power t^(-2).

    Entry i is the coefficient of t^(i-2) in
    2*alpha*alpha'' - alpha'^2 - 4*omega0^2 + alpha^2*(mu_s^2 + lam^2/t^2).
    Works for float or Fraction coefficient sequences alike.
    """
    tri = convolution_triple(a)
    zero = 0 * a[0]

    def at(seq, k):
        return seq[k] if 0 <= k < len(seq) else zero

    out = [lam_sq * at(tri.c, 0), lam_sq * at(tri.c, 1)]
    for k in range(0, n_powers - 2):
        r = 2 * at(tri.d, k) - at(tri.b, k) + mu_sq * at(tri.c, k) \
            + lam_sq * at(tri.c, k + 2)
        if k == 0:
            r = r - four_omega0_sq
        out.append(r)
    return out


def symbolic_residual(series, a0=0.0, exact=None):
    """Residual coefficients of the truncated series, powers t^-2 .. t^(2N-1).

    All entries vanish (exactly in rational mode, below 1e-12 in floating
    point) for a series built by `build_series`; forcing a0 != 0 reproduces
    the leading obstruction lam^2 * a0^2 in the first entry.
    """
    n_powers = 2 * series.order + 2  # powers -2 .. 2*order - 1
    if exact is None:
        exact = a0 == 0.0 and isinstance(series.ratios[0], Fraction)
    if exact:
        # work with a1-normalized coefficients; residual scales by a1^2 and
        # 4*omega0^2 = a1^2 (lam^2 - 1)
        lam_sq = Fraction(series.lam) * Fraction(series.lam)
        mu_sq = Fraction(series.mu_s) * Fraction(series.mu_s)
        coeffs = [Fraction(0)] * (2 * series.order)
        for k, r in enumerate(series.ratios):
            coeffs[2 * k + 1] = r
        res = residual_coefficients(coeffs, lam_sq - 1, mu_sq, lam_sq, n_powers)
        a1_sq = series.a1 * series.a1
        return [a1_sq * float(r) for r in res]
    coeffs = series.full_coefficients()
    coeffs[0] = float(a0)
    return residual_coefficients(coeffs, 4.0 * series.omega0 ** 2,
                                 series.mu_s ** 2, series.lam ** 2, n_powers)


def constraint_residual(series, t):
    """2 a a'' - a'^2 - 4 w0^2 + a^2 (mu_s^2 + lam^2/t^2) at times t."""
    t = np.asarray(t, dtype=float)
    al = series.alpha(t)
    ald = series.alpha_dot(t)
    aldd = series.alpha_ddot(t)
    return (2.0 * al * aldd - ald * ald - 4.0 * series.omega0 ** 2
            + al * al * (series.mu_s ** 2 + series.lam ** 2 / (t * t)))


def alpha_numeric_check(series, t_lo, t_hi, n=201):
    """Max constraint residual of the truncated series on a uniform grid.

    Warns (ConvergenceWarning) when t_hi exceeds the 2/mu_s guard.
    """
    if not (0.0 < t_lo < t_hi):
        raise ParameterError("need 0 < t_lo < t_hi")
    if t_hi > series.radius_guard():
        warnings.warn(
            f"t_hi={t_hi} exceeds the trusted window 2/mu_s="
            f"{series.radius_guard():g}", ConvergenceWarning, stacklevel=2)
    grid = np.linspace(t_lo, t_hi, n)
    return float(np.max(np.abs(constraint_residual(series, grid))))


def reciprocal_identity_coefficients(series):
    """Cross-term coefficients of (alpha/(a1 t)) * sum a_tilde t^{2k} - 1.

    Exact zeros through t^(2*order-2) when the reciprocal was built
    correctly; returned in the arithmetic of the stored ratios.
    """
    r, q = series.ratios, series.tilde_ratios
    out = []
    for k in range(series.order):
        acc = 0 * r[0]
        for j in range(k + 1):
            acc += r[j] * q[k - j]
        out.append(acc - (1 if k == 0 else 0))
    return out


def determinant_tilde(series, k):
    """a_tilde[k] via the banded-determinant form (cross-check only).

    Builds the 2k x 2k matrix M[i][j] = a_{i-j+2} in the full (even-padded)
    index convention, with every entry a1-normalized so the (-1/a1)^{2k}
    prefactor reduces to (+1); exact fractions when the series carries them.
    """
    if not 0 <= k < series.order:
        raise ParameterError("determinant form needs k < series.order")
    if k == 0:
        return series.tilde_ratios[0] * 0 + 1
    m = 2 * k
    r = series.ratios

    def coeff(i):  # a_i / a1 with even zeros
        if i < 1 or i % 2 == 0 or (i - 1) // 2 >= len(r):
            return 0 * r[0]
        return r[(i - 1) // 2]

    mat = [[coeff(i - j + 2) for j in range(1, m + 1)] for i in range(1, m + 1)]
    return _det(mat)


def _det(mat):
    # fraction-safe Gaussian elimination; exact for Fraction entries
    n = len(mat)
    m = [list(row) for row in mat]
    det = mat[0][0] * 0 + 1
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return det * 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pval = m[col][col]
        det = det * pval
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / pval
                m[r] = [m[r][j] - f * m[col][j] for j in range(n)]
    return det * sign


def appendix_a3_candidates(omega0, lam, mu_s, nu):
    """Both published candidates for a3 (the recursion uses lam^2; one
    printed equation uses nu^2 instead).  The recursion value is canonical."""
    a1 = 2.0 * omega0 / math.sqrt(lam * lam - 1.0)
    return {
        "recursion": -mu_s ** 2 * a1 / (2.0 * (3.0 + lam * lam)),
        "appendix_literal": -mu_s ** 2 * a1 / (2.0 * (3.0 + nu * nu)),
    }


def theta_series(series, t0, t1):
    """Phase increment 2*integral(omega) on [t0, t1] from the reciprocal series.

    theta(t) = (2*omega0/a1) [ln t + sum_{k>=1} a_tilde[k] t^{2k} / (2k)].
    """
    if not (t0 > 0.0 and t1 > 0.0):
        raise ParameterError("phase series requires positive times")
    guard = series.radius_guard()
    if max(t0, t1) > guard:
        warnings.warn(
            f"evaluation beyond the trusted window 2/mu_s={guard:g}",
            ConvergenceWarning, stacklevel=2)

    def theta(t):
        acc = math.log(t)
        t2k = 1.0
        for k in range(1, series.order):
            t2k *= t * t
            acc += series.a_tilde[k] * t2k / (2.0 * k)
        return 2.0 * series.omega0 / series.a1 * acc

    return theta(t1) - theta(t0)


def omega_series(series, t):
    """omega(t) evaluated through the reciprocal series (not via 1/alpha)."""
    t = np.asarray(t, dtype=float)
    t2 = t * t
    acc = np.zeros_like(t)
    for k in range(series.order - 1, -1, -1):
        acc = acc * t2 + series.a_tilde[k]
    return series.omega0 / (series.a1 * t) * acc


def bessel_reduction_check(Omega0, k0, nu, t_grid):
    """Max residual of y'' + Omega0^2 (k0^2 + nu^2/t^2) y for y = sqrt(t) Z_rho(l t).

    l = Omega0*k0 and rho^2 = 1/4 - Omega0^2 nu^2 (ParameterError when
    negative).  rho = 1/2 short-circuits to the elementary solution sin(l t).
    """
    rho_sq = 0.25 - (Omega0 * nu) ** 2
    if rho_sq < 0.0:
        raise ParameterError("imaginary Bessel order (rho^2 < 0) is out of scope")
    ell = Omega0 * k0
    if ell <= 0.0:
        raise ParameterError("need Omega0 * k0 > 0")
    t = np.asarray(t_grid, dtype=float)
    if np.any(t <= 0.0):
        raise ParameterError("grid must be positive")
    omega2 = Omega0 ** 2 * (k0 ** 2 + nu ** 2 / (t * t))
    rho = math.sqrt(rho_sq)
    if abs(rho - 0.5) < 1e-13:
        y = np.sin(ell * t)
        ydd = -ell * ell * y
    else:
        j, dj, d2j = bessel.jv(rho, ell * t)
        rt = np.sqrt(t)
        y = rt * j
        ydd = -0.25 * j / (t * rt) + ell * dj / rt + ell * ell * rt * d2j
    return float(np.max(np.abs(ydd + omega2 * y)))


def power_law_check(Omega0, nu, t_grid):
    """Max residual of q'' + q'/t + (Omega0^2 nu^2 - 1/4) q / t^2 for q = t^(+-beta).

    beta = sqrt(1/4 - Omega0^2 nu^2); covers the mu_s = 0 elementary case.
    """
    beta_sq = 0.25 - (Omega0 * nu) ** 2
    if beta_sq < 0.0:
        raise ParameterError("power-law exponents require Omega0^2 nu^2 <= 1/4")
    beta = math.sqrt(beta_sq)
    t = np.asarray(t_grid, dtype=float)
    worst = 0.0
    for b in (beta, -beta):
        q = t ** b
        dq = b * t ** (b - 1.0)
        d2q = b * (b - 1.0) * t ** (b - 2.0)
        res = d2q + dq / t + ((Omega0 * nu) ** 2 - 0.25) * q / (t * t)
        worst = max(worst, float(np.max(np.abs(res))))
    return worst


def linearization_gap(Omega0, k0, nu, omega0, sigma0, sigma_dot0, t0, t1,
                      n=101):
    """Error committed by dropping the omega0^2/(4 sigma^3) restoring term.

    Integrates the full amplitude equation
        sigma'' + Omega0^2 (k0^2 + nu^2/t^2) sigma = omega0^2 / (4 sigma^3)
    and its linearization side by side from the same initial data and
    returns the largest |sigma_full - sigma_linear| on a uniform grid.  The
    caller judges in which regime the linearization is acceptable.
    """
    from . import dopri

    if min(t0, t1) <= 0.0 or not t1 > t0:
        raise ParameterError("need 0 < t0 < t1")

    def w2(t):
        return Omega0 ** 2 * (k0 ** 2 + nu ** 2 / (t * t))

    K = 0.25 * omega0 ** 2

    def rhs_full(t, y):
        return np.array([y[1], -w2(t) * y[0] + K / y[0] ** 3])

    def rhs_lin(t, y):
        return np.array([y[1], -w2(t) * y[0]])

    grid = np.linspace(t0, t1, n)
    y0 = np.array([sigma0, sigma_dot0])
    _, yf = dopri.solve(rhs_full, t0, t1, y0, t_eval=grid,
                        rtol=1e-10, atol=1e-12)
    _, yl = dopri.solve(rhs_lin, t0, t1, y0, t_eval=grid,
                        rtol=1e-10, atol=1e-12)
    return float(np.max(np.abs(yf[:, 0] - yl[:, 0])))


def large_k0_approx(Omega0, k0, omega0, c1, c2, t, C1=1.0, phi0=0.0):
    """Oscillatory scale-function approximation valid when k0^2 >> nu^2/t^2.

    alpha = c1 + sqrt(c1^2 - omega0^2/(Omega0 k0)^2) * sin(2 Omega0 k0 (t+c2))
    and the matching trajectory q = C1 sin(phase(t) + phi0), phase being the
    continuous arctan form of integral(omega0/alpha dt).  Raises
    ParameterError on a negative radicand and NonPositiveAlpha when alpha
    fails to stay positive on the requested times.
    """
    ell = Omega0 * k0
    if ell <= 0.0:
        raise ParameterError("need Omega0 * k0 > 0")
    rad = c1 * c1 - (omega0 / ell) ** 2
    if rad < 0.0:
        raise ParameterError("require c1^2 >= omega0^2 / (Omega0 k0)^2")
    amp = math.sqrt(rad)
    t = np.asarray(t, dtype=float)
    alpha = c1 + amp * np.sin(2.0 * ell * (t + c2))
    if np.any(alpha <= 0.0):
        raise NonPositiveAlpha("alpha not positive on the requested range")
    # integral of omega0/alpha is arctan[(c1 tan(l(t+c2)) + amp) l/w0],
    # continued across the tan poles (c1 > 0 whenever alpha > 0)
    psi = ell * (t + c2)
    n = np.floor((psi + 0.5 * math.pi) / math.pi)
    wrapped = psi - n * math.pi
    phase = np.arctan((c1 * np.tan(wrapped) + amp) * ell / omega0) + n * math.pi
    q = C1 * np.sin(phase + phi0)
    return alpha, q
