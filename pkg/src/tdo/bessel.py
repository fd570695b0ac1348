"""First-kind Bessel function J_rho built from its defining expansions.

Ascending power series for 0 < x <= 12, Hankel asymptotic expansion beyond,
with the switchover fixed at |x| = 12.  Values come with analytic first and
second derivatives (termwise differentiation of whichever expansion is in
use), so ODE residual checks need no finite differencing.  Only real
nonnegative orders are supported.
"""

import math

import numpy as np

from .errors import ParameterError

SWITCHOVER = 12.0
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def _jv_series(rho, x):
    # J = sum_m (-1)^m (x/2)^(2m+rho) / (m! Gamma(m+rho+1)); termwise d/dx
    half = 0.5 * x
    term = half ** rho / math.gamma(rho + 1.0)
    s0 = s1 = s2 = 0.0
    m = 0
    while True:
        p = 2 * m + rho
        s0 += term
        s1 += term * p
        s2 += term * p * (p - 1.0)
        m += 1
        term *= -(half * half) / (m * (m + rho))
        if abs(term) < 1e-18 * (abs(s0) + 1e-300) and m > half:
            break
        if m > 400:  # unreachable for x <= SWITCHOVER
            break
    return s0, s1 / x, s2 / (x * x)


def _jv_asymptotic(rho, x):
    # Hankel expansion J = F(x) cos(chi) + G(x) sin(chi) with
    # chi = x - rho*pi/2 - pi/4,
    # F =  sqrt(2/pi) * sum_{k even} (-1)^(k//2) A_k x^(-1/2-k),
    # G = -sqrt(2/pi) * sum_{k odd}  (-1)^(k//2) A_k x^(-1/2-k),
    # A_k = prod_{j<=k} (4 rho^2 - (2j-1)^2) / (k! 8^k).
    # Each term is an exact power of x, so F', F'', G', G'' are termwise.
    mu4 = 4.0 * rho * rho
    chi = x - rho * math.pi / 2.0 - math.pi / 4.0
    cc, ss = math.cos(chi), math.sin(chi)
    pref = _SQRT_2_OVER_PI / math.sqrt(x)
    Fv = Fd = Fdd = 0.0
    Gv = Gd = Gdd = 0.0
    t = 1.0  # running A_k / x^k
    k = 0
    while True:
        p = -0.5 - k
        v = pref * t * (-1.0) ** (k // 2)
        if k % 2 == 1:
            v = -v
            Gv += v
            Gd += v * p / x
            Gdd += v * p * (p - 1.0) / (x * x)
        else:
            Fv += v
            Fd += v * p / x
            Fdd += v * p * (p - 1.0) / (x * x)
        k += 1
        t_next = t * (mu4 - (2 * k - 1) ** 2) / (8.0 * k * x)
        # truncate at the smallest term: the expansion is asymptotic
        if abs(t_next) >= abs(t) or abs(t_next) < 1e-18 or k > 60:
            break
        t = t_next
    j = Fv * cc + Gv * ss
    dj = (Fd + Gv) * cc + (Gd - Fv) * ss
    d2j = (Fdd + 2.0 * Gd - Fv) * cc + (Gdd - 2.0 * Fd - Gv) * ss
    return j, dj, d2j


def _jv_scalar(rho, x):
    if x <= 0.0:
        raise ParameterError("Bessel evaluator requires x > 0")
    if x <= SWITCHOVER:
        return _jv_series(rho, x)
    return _jv_asymptotic(rho, x)


def jv(rho, x):
    """J_rho(x) with first and second derivatives, as a (J, J', J'') triple.

    x may be a scalar or an array; rho must be a real number >= 0.
    """
    if rho < 0:
        raise ParameterError("order rho must be >= 0")
    xs = np.asarray(x, dtype=float)
    if xs.ndim == 0:
        return _jv_scalar(rho, float(xs))
    out = np.empty((3, xs.size))
    for i, xi in enumerate(xs.ravel()):
        out[:, i] = _jv_scalar(rho, xi)
    return out[0].reshape(xs.shape), out[1].reshape(xs.shape), out[2].reshape(xs.shape)


def defining_ode_residual(rho, x):
    """Residual of Z'' + Z'/x + (1 - rho^2/x^2) Z at x (scalar or array)."""
    j, dj, d2j = jv(rho, x)
    xs = np.asarray(x, dtype=float)
    return d2j + dj / xs + (1.0 - rho * rho / (xs * xs)) * j
