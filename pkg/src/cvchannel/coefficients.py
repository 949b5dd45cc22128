"""Time-dependent coefficients of the exact master equation.

Each mode acquires a shifted frequency Omega(t) and decay rate Gamma(t); the
pair acquires a shifted coupling Omega'(t) and correlated decay Gamma'(t).
They follow from the propagator through

    -Gamma  - i Omega  = (s'/s + c'/c) / 2,
    -Gamma' - i Omega' = (s'/s - c'/c) / 2,

with c'/c = -i(w0 - kappa) exact.  Homogeneous coupling therefore forces
Gamma = Gamma' and w0 - Omega = kappa - Omega' sample by sample.  Computing
from s'/s (rather than the u,v form with u^2 - v^2 = c s in the denominator)
avoids catastrophic cancellation as s -> 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .propagator import PropagatorTrajectory

__all__ = ["SATURATION_THRESHOLD", "MasterCoefficients", "master_coefficients",
           "frequency_shifts"]

# |s| below this is treated as fully decayed: s'/s is no longer meaningful
# and the coefficients are frozen at their last resolved values.
SATURATION_THRESHOLD = 1e-12


@dataclass(frozen=True)
class MasterCoefficients:
    """Coefficient samples on the trajectory grid (struct of arrays)."""

    t: np.ndarray
    omega: np.ndarray
    omega_prime: np.ndarray
    gamma: np.ndarray
    gamma_prime: np.ndarray
    saturated: np.ndarray  # bool mask: samples frozen because |s| ~ 0

    def __len__(self) -> int:
        return len(self.t)


def master_coefficients(traj: PropagatorTrajectory) -> MasterCoefficients:
    """Extract {Omega, Omega', Gamma, Gamma'} from a solved trajectory."""
    if traj.sdot is None:
        raise ValueError("trajectory carries no right-hand-side derivative sdot")
    cfg = traj.cfg
    half_rel = 0.5 * (cfg.omega0 - cfg.kappa)

    saturated = np.abs(traj.s) < SATURATION_THRESHOLD
    safe_s = np.where(saturated, 1.0, traj.s)
    ratio = traj.sdot / safe_s

    gamma = -0.5 * np.real(ratio)
    half_im = -0.5 * np.imag(ratio)
    omega = half_im + half_rel
    omega_prime = half_im - half_rel

    if saturated.any():
        # freeze saturated samples at the last resolved value
        idx = np.maximum.accumulate(np.where(~saturated, np.arange(len(saturated)), 0))
        gamma = gamma[idx]
        omega = omega[idx]
        omega_prime = omega_prime[idx]

    out = MasterCoefficients(
        t=traj.times,
        omega=omega,
        omega_prime=omega_prime,
        gamma=gamma,
        gamma_prime=gamma.copy(),
        saturated=saturated,
    )
    for arr in (out.omega, out.omega_prime, out.gamma, out.gamma_prime, out.saturated):
        arr.flags.writeable = False
    return out


def frequency_shifts(coeffs: MasterCoefficients, omega0: float, kappa: float):
    """Environment-induced shifts (delta_omega, delta_omega_prime) =
    (w0 - Omega, kappa - Omega').

    The homogeneous-coupling symmetry makes them one quantity; both entries
    are served from the same samples so the equality is exact as computed.
    """
    delta = omega0 - coeffs.omega
    return delta, delta.copy()
