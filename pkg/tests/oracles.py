"""Shared brute-force oracles and generators for the test suite."""
import numpy as np
from scipy.sparse import diags, identity, kron
from scipy.sparse.linalg import expm_multiply


def fock_tmsv_state(r, cutoff):
    """Two-mode squeezed vacuum in a truncated number basis, built by
    applying exp(r(a1 a2 - a1+ a2+)) to |00> with a sparse exponential.

    Returns (psi, a1, a2) with dense state vector and sparse mode operators.
    """
    dim = cutoff + 1
    a = diags(np.sqrt(np.arange(1.0, dim)), 1)
    one = identity(dim, format="csr")
    a1 = kron(a, one, format="csr")
    a2 = kron(one, a, format="csr")
    gen = (a1 @ a2 - a1.T @ a2.T) * r
    vac = np.zeros(dim * dim)
    vac[0] = 1.0
    psi = expm_multiply(gen, vac)
    return psi, a1, a2


def fock_tmsv_diagonal(r, cutoff):
    """Same state via its invariant subspace span{|kk>}, where the squeezing
    generator acts tridiagonally; reaches the large cutoffs needed for
    strong squeezing.  Returns the amplitude vector c_k = <kk|psi>.
    """
    k = np.arange(cutoff + 1)
    sub = k[1:].astype(float)  # a1 a2 |kk> = k |k-1,k-1>
    gen = diags([sub, -sub], [1, -1], format="csr") * r
    c0 = np.zeros(cutoff + 1)
    c0[0] = 1.0
    return expm_multiply(gen, c0)


def diagonal_moments(c):
    """<a1+ a1> and <a1 a2> evaluated directly on a diagonal-sector vector."""
    k = np.arange(len(c))
    occupation = float(np.sum(k * c**2))
    pair = float(np.sum(c[:-1] * k[1:] * c[1:]))
    return occupation, pair


def expect(psi, op):
    return complex(np.vdot(psi, op @ psi))


def rotation_2x2(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def random_symplectic(rng):
    """Random 4x4 symplectic via Euler decomposition: passive * squeeze * passive,
    passive = local rotations sandwiching a beam splitter."""

    def passive():
        bs = np.zeros((4, 4))
        th = rng.uniform(0.0, 2.0 * np.pi)
        bs[:2, :2] = np.cos(th) * np.eye(2)
        bs[2:, 2:] = np.cos(th) * np.eye(2)
        bs[:2, 2:] = np.sin(th) * np.eye(2)
        bs[2:, :2] = -np.sin(th) * np.eye(2)
        loc_a = np.zeros((4, 4))
        loc_a[:2, :2] = rotation_2x2(rng.uniform(0.0, 2.0 * np.pi))
        loc_a[2:, 2:] = rotation_2x2(rng.uniform(0.0, 2.0 * np.pi))
        loc_b = np.zeros((4, 4))
        loc_b[:2, :2] = rotation_2x2(rng.uniform(0.0, 2.0 * np.pi))
        loc_b[2:, 2:] = rotation_2x2(rng.uniform(0.0, 2.0 * np.pi))
        return loc_a @ bs @ loc_b

    z1, z2 = rng.uniform(-1.0, 1.0, size=2)
    squeeze = np.diag([np.exp(z1), np.exp(-z1), np.exp(z2), np.exp(-z2)])
    return passive() @ squeeze @ passive()


def random_physical_covariance(rng, max_nu=3.0):
    """S diag(nu1,nu1,nu2,nu2) S^T with nu_i >= 1/2: a valid two-mode
    covariance with known symplectic spectrum."""
    nu = np.sort(rng.uniform(0.5, max_nu, size=2))
    D = np.diag([nu[0], nu[0], nu[1], nu[1]])
    S = random_symplectic(rng)
    V = S @ D @ S.T
    return 0.5 * (V + V.T), nu
