"""Partial transposition, symplectic spectra, and logarithmic negativity.

Covariance matrices are 4x4 real symmetric over X = (x1, p1, x2, p2) with
vacuum variance 1/2; the symplectic form is U = J (+) J, J = [[0,1],[-1,0]].
Partial transposition of the second mode is the phase-space reflection
V~ = L V L with L = diag(1, 1, 1, -1), and

    E_N = max{0, -log2(2 nu~_min)}

with nu~_min the smaller symplectic eigenvalue of V~.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "SYMPLECTIC_FORM",
    "SymplecticSpectrum",
    "partial_transpose",
    "symplectic_spectrum",
    "symplectic_spectrum_oracle",
    "log_negativity",
]

SYMPLECTIC_FORM = np.array(
    [[0.0, 1.0, 0.0, 0.0],
     [-1.0, 0.0, 0.0, 0.0],
     [0.0, 0.0, 0.0, 1.0],
     [0.0, 0.0, -1.0, 0.0]]
)

_PT_MIRROR = np.array([1.0, 1.0, 1.0, -1.0])

# relative slack for clamping the invariant-formula discriminant; pure states
# sit exactly on the degeneracy and roundoff scales with Delta^2
_CLAMP_REL = 1e-12


class SymplecticSpectrum(NamedTuple):
    nu1: float
    nu2: float


def _check_covariance(V: np.ndarray) -> np.ndarray:
    V = np.asarray(V, dtype=float)
    if V.shape != (4, 4):
        raise ValueError(f"expected a 4x4 covariance matrix, got shape {V.shape}")
    if not np.allclose(V, V.T, rtol=0.0, atol=1e-10 * max(1.0, np.abs(V).max())):
        raise ValueError("covariance matrix must be symmetric")
    return V


def partial_transpose(V: np.ndarray) -> np.ndarray:
    """Mirror reflection of the second mode's momentum: V~ = L V L."""
    V = _check_covariance(V)
    return V * _PT_MIRROR[:, None] * _PT_MIRROR[None, :]


def symplectic_spectrum(V: np.ndarray) -> SymplecticSpectrum:
    """Symplectic eigenvalues from the two-mode invariant formula.

    For V = [[A, C], [C^T, B]]:  nu^2 = (Delta +- sqrt(Delta^2 - 4 det V))/2
    with Delta = det A + det B + 2 det C.  The smaller root is evaluated in
    the conjugate form 2 det V / (Delta + sqrt(...)), which stays accurate
    when the subtraction would cancel (pure and near-pure states).
    """
    V = _check_covariance(V)
    A, B, C = V[:2, :2], V[2:, 2:], V[:2, 2:]
    det_a, det_b, det_c = np.linalg.det(A), np.linalg.det(B), np.linalg.det(C)
    delta = det_a + det_b + 2.0 * det_c
    det_v = np.linalg.det(V)
    # roundoff scale: delta and the discriminant come out of cancellations of
    # the individual determinants (large for strong squeezing)
    gross = abs(det_a) + abs(det_b) + 2.0 * abs(det_c)
    scale = max(1.0, gross * gross)
    if det_v < -_CLAMP_REL * scale:
        raise ValueError(f"det V = {det_v:g} < 0: not a covariance matrix")
    det_v = max(det_v, 0.0)
    disc = delta * delta - 4.0 * det_v
    if disc < -_CLAMP_REL * scale:
        raise ValueError(
            f"complex symplectic spectrum (discriminant {disc:g}): "
            "not a covariance matrix"
        )
    if abs(disc) <= _CLAMP_REL * scale:
        # sub-roundoff splitting: treat as exactly degenerate rather than
        # amplifying noise through the square root
        disc = 0.0
    root = np.sqrt(max(disc, 0.0))
    if delta + root <= 0.0:
        raise ValueError(f"non-positive symplectic invariant Delta = {delta:g}")
    nu_hi = np.sqrt((delta + root) / 2.0)
    nu_lo = np.sqrt(2.0 * det_v / (delta + root))
    if nu_lo > nu_hi:  # degenerate spectra may misorder at roundoff level
        nu_lo, nu_hi = nu_hi, nu_lo
    return SymplecticSpectrum(nu1=float(nu_lo), nu2=float(nu_hi))


def symplectic_spectrum_oracle(V: np.ndarray) -> SymplecticSpectrum:
    """Symplectic eigenvalues via a general eigensolver on i U V."""
    V = _check_covariance(V)
    ev = np.linalg.eigvals(1j * SYMPLECTIC_FORM @ V)
    mods = np.sort(np.abs(ev))  # pairs {nu1, nu1, nu2, nu2}
    return SymplecticSpectrum(nu1=float(mods[0]), nu2=float(mods[2]))


def log_negativity(V: np.ndarray) -> float:
    """Logarithmic negativity E_N = max{0, -log2(2 nu~_min)}; zero iff the
    partially transposed state still satisfies the uncertainty principle."""
    nu_min = symplectic_spectrum(partial_transpose(V)).nu1
    return max(0.0, -np.log2(2.0 * nu_min))
