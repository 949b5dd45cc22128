"""Gaussian state dynamics of the two-mode squeezed channel.

The channel state starts as the two-mode squeezed vacuum with squeezing
parameter r.  In the normal modes

    center  A~ = (a1 + a2)/sqrt(2),    relative  a~ = (a1 - a2)/sqrt(2),

the initial state is a product of single-mode squeezed vacua with occupations
N = sinh^2 r and correlations <A~^2> = -sinh(2r)/2, <a~^2> = +sinh(2r)/2.
Only the center mode couples to the common environment; its moments follow
the propagator amplitude s(t) in closed form while the relative mode rotates
freely with c(t).  Second moments are a complete description (the state stays
zero-mean Gaussian), so no operator-basis truncation enters the main path.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coefficients import MasterCoefficients

__all__ = [
    "NormalModeMoments",
    "BCoefficients",
    "MomentSeries",
    "initial_normal_moments",
    "propagate_moments",
    "covariance_from_moments",
    "moment_ode_oracle",
    "appendix_b_coefficients",
]

# quadrature rotation (x1,p1,x2,p2) <- (X_center, P_center, X_rel, P_rel);
# orthogonal and symplectic
_NORMAL_TO_LOCAL = np.array(
    [[1.0, 0.0, 1.0, 0.0],
     [0.0, 1.0, 0.0, 1.0],
     [1.0, 0.0, -1.0, 0.0],
     [0.0, 1.0, 0.0, -1.0]]
) / np.sqrt(2.0)


@dataclass(frozen=True)
class NormalModeMoments:
    """Second moments of the center-of-mass and relative modes: occupations
    n_* = <b†b> and squeezing correlations m_* = <b^2>."""

    n_center: float
    m_center: complex
    n_rel: float
    m_rel: complex


@dataclass(frozen=True)
class BCoefficients:
    """Coefficients of the coherent-state kernel of the reduced state."""

    b0: float
    b1: complex
    b2: complex
    b3: complex
    b4: complex
    b5: complex
    b6: complex


@dataclass(frozen=True)
class MomentSeries:
    """Normal-mode moments sampled on a time grid."""

    t: np.ndarray
    n_center: np.ndarray
    m_center: np.ndarray
    n_rel: np.ndarray
    m_rel: np.ndarray


def initial_normal_moments(r: float) -> NormalModeMoments:
    """Normal-mode moments of the two-mode squeezed vacuum."""
    if r < 0:
        raise ValueError(f"squeezing parameter r must be >= 0, got {r}")
    occ = np.sinh(r) ** 2
    cor = 0.5 * np.sinh(2.0 * r)
    return NormalModeMoments(
        n_center=occ, m_center=complex(-cor), n_rel=occ, m_rel=complex(+cor)
    )


def propagate_moments(m0: NormalModeMoments, s: complex, c: complex) -> NormalModeMoments:
    """Exact moment evolution: the center mode is damped by s, the relative
    mode rotates with c and keeps its occupation."""
    return NormalModeMoments(
        n_center=m0.n_center * abs(s) ** 2,
        m_center=m0.m_center * s * s,
        n_rel=m0.n_rel,
        m_rel=m0.m_rel * c * c,
    )


def _mode_block(n: float, m: complex) -> np.ndarray:
    return np.array(
        [[0.5 + n + m.real, m.imag],
         [m.imag, 0.5 + n - m.real]]
    )


def covariance_from_moments(m: NormalModeMoments) -> np.ndarray:
    """4x4 quadrature covariance over (x1, p1, x2, p2), vacuum variance 1/2.

    Raises for unphysical moments violating |m|^2 <= n(n+1) (tiny slack so
    pure squeezed modes, which sit exactly on the boundary, pass).
    """
    for label, n, mm in (("center", m.n_center, m.m_center),
                         ("relative", m.n_rel, m.m_rel)):
        if n < 0:
            raise ValueError(f"unphysical {label}-mode occupation {n}")
        slack = 1e-12 * (1.0 + n) ** 2
        if abs(mm) ** 2 > n * (n + 1.0) + slack:
            raise ValueError(
                f"unphysical {label}-mode moments: |m|^2 = {abs(mm)**2:g} exceeds "
                f"n(n+1) = {n * (n + 1.0):g}"
            )
    v_normal = np.zeros((4, 4))
    v_normal[:2, :2] = _mode_block(m.n_center, m.m_center)
    v_normal[2:, 2:] = _mode_block(m.n_rel, m.m_rel)
    return _NORMAL_TO_LOCAL @ v_normal @ _NORMAL_TO_LOCAL.T


def _rk4_log_linear(y0: complex, rate: np.ndarray, h: float) -> np.ndarray:
    """RK4 for y' = rate(t) y with rate sampled at t_k = k*h/2 (so each RK4
    step consumes two consecutive samples plus the shared midpoint)."""
    n_pairs = (len(rate) - 1) // 2
    y = np.empty(n_pairs + 1, dtype=complex)
    y[0] = y0
    for j in range(n_pairs):
        a0, a1, a2 = rate[2 * j], rate[2 * j + 1], rate[2 * j + 2]
        k1 = a0 * y[j]
        k2 = a1 * (y[j] + 0.5 * h * k1)
        k3 = a1 * (y[j] + 0.5 * h * k2)
        k4 = a2 * (y[j] + h * k3)
        y[j + 1] = y[j] + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


def moment_ode_oracle(m0: NormalModeMoments, coeffs: MasterCoefficients) -> MomentSeries:
    """Oracle: integrate the moment equations driven by the sampled master
    coefficients instead of using the closed-form propagator solution,

        n_center' = -4 Gamma n_center,
        m_center' = -2 (i(Omega + Omega') + 2 Gamma) m_center,
        m_rel'    = -2 i (Omega - Omega') m_rel,

    with RK4 over pairs of grid intervals (midpoints are exact samples).
    The fast phase rotation at the bare normal-mode frequencies, read off
    the t=0 coefficient samples, is split off by an exact integrating
    factor so the stepper only resolves the environment-induced envelope.
    Returns moments on the decimated grid t[::2].
    """
    t = coeffs.t
    if len(t) < 3:
        raise ValueError("need at least two grid intervals for the RK4 oracle")
    h = 2.0 * (t[1] - t[0])
    n_pairs = (len(t) - 1) // 2
    tt = t[: 2 * n_pairs + 1 : 2]

    w_sum0 = coeffs.omega[0] + coeffs.omega_prime[0]    # bare center frequency
    w_diff0 = coeffs.omega[0] - coeffs.omega_prime[0]   # bare relative frequency

    n_center = _rk4_log_linear(m0.n_center, -4.0 * coeffs.gamma, h).real
    rate_c = -4.0 * coeffs.gamma - 2j * (coeffs.omega + coeffs.omega_prime - w_sum0)
    m_center = _rk4_log_linear(m0.m_center, rate_c, h) * np.exp(-2j * w_sum0 * tt)
    rate_r = -2j * (coeffs.omega - coeffs.omega_prime - w_diff0)
    m_rel = _rk4_log_linear(m0.m_rel, rate_r, h) * np.exp(-2j * w_diff0 * tt)
    n_rel = np.full(n_pairs + 1, m0.n_rel)

    return MomentSeries(t=tt, n_center=n_center, m_center=m_center,
                        n_rel=n_rel, m_rel=m_rel)


def appendix_b_coefficients(u: complex, v: complex, r: float) -> BCoefficients:
    """Coherent-state-kernel coefficients b0..b6 of the reduced state at
    propagator values (u, v).

    Auxiliaries: m = |u|^2 + |v|^2 - 1 and n = 2 Re(conj(u) v) (both real),
    cc = 1 - tanh^2 r (m^2 + n^2), ee = tanh(r) m n, and the common
    denominator D = 1 - 2 tanh^2 r (m^2+n^2) + tanh^4 r (m^2-n^2)^2.  The
    b1 numerator pairs (u n + v m) with (u m + v n), mirroring b3.
    """
    if r < 0:
        raise ValueError(f"squeezing parameter r must be >= 0, got {r}")
    T = np.tanh(r)
    ub, vb = np.conj(u), np.conj(v)
    m = (ub * u + vb * v).real - 1.0
    n = (ub * v + vb * u).real
    sq = m * m + n * n
    D = 1.0 - 2.0 * T**2 * sq + T**4 * (m * m - n * n) ** 2
    if D <= 1e-14 * max(1.0, T**2 * sq) ** 2:
        raise ValueError(
            f"vanishing kernel denominator D = {D:g} at u={u}, v={v}, r={r}"
        )
    cc = 1.0 - T**2 * sq
    ee = T * m * n

    p = u * n + v * m
    q = u * m + v * n
    b0 = 1.0 / (np.cosh(r) ** 2 * np.sqrt(D))
    b1 = (ee * T**4 * (p * p + q * q) + cc * T**3 * p * q) / D + T * u * v
    b2 = (ee * T**2 * (ub * ub + vb * vb) + cc * T * ub * vb) / D
    b3 = (ee * (-4.0 * T**4 * p * q) + cc * (-(T**3) * (p * p + q * q))) / D \
        - T * (u * u + v * v)
    b4 = (ee * (-2.0 * T**3 * (ub * p + vb * q)) + cc * (-(T**2) * (ub * q + vb * p))) / D
    b5 = (ee * (+2.0 * T**3 * (ub * q + vb * p)) + cc * (+(T**2) * (ub * p + vb * q))) / D
    b6 = (ee * (-4.0 * T**2 * ub * vb) + cc * (-T * (ub * ub + vb * vb))) / D
    return BCoefficients(b0=float(b0), b1=complex(b1), b2=complex(b2),
                         b3=complex(b3), b4=complex(b4), b5=complex(b5),
                         b6=complex(b6))
