"""Pure-NumPy implementation of the Volterra predictor-corrector loops.

Drop-in fallback for the compiled core in ``_volterra``; selected by
``_backend`` when the extension is not available.  The history sum is the
O(N^2) hot spot and runs through BLAS ``dot`` on a reversed weight view.
"""
import numpy as np

BACKEND_NAME = "python"


def center_amplitude_loop(weights, edge, dt, n_steps):
    """March the rotating-frame center-mode amplitude.

    phi'(t) = -2 * int_0^t K(t-tau) phi(tau) dtau,  phi(0) = 1,

    with the memory integral in product form: I_K = sum_i W[K-i] phi_i
    - edge[K] phi_0 (W, edge precomputed from kernel moments).  Explicit
    Euler predictor, one trapezoidal corrector pass.  Returns (phi, deriv)
    with deriv recomputed from the right-hand side at accepted values.
    """
    N = n_steps
    phi = np.empty(N + 1, dtype=np.complex128)
    deriv = np.empty(N + 1, dtype=np.complex128)
    phi[0] = 1.0
    deriv[0] = 0.0
    w0 = weights[0]
    for k in range(N):
        K = k + 1
        core = np.dot(weights[K:0:-1], phi[:K]) - edge[K] * phi[0]
        pred = phi[k] + dt * deriv[k]
        g_pred = -2.0 * (core + w0 * pred)
        phi[K] = phi[k] + 0.5 * dt * (deriv[k] + g_pred)
        deriv[K] = -2.0 * (core + w0 * phi[K])
        if not (np.isfinite(phi[K].real) and np.isfinite(phi[K].imag)):
            raise FloatingPointError(
                f"center-amplitude integration produced a non-finite value "
                f"at step {K} (t = {K * dt:g})"
            )
    return phi, deriv


def coupled_pair_loop(weights, edge, dt, n_steps, kappa):
    """March the coupled pair (u, v) in the frame rotating at the field
    frequency, without the center/relative decoupling.

    u'(t) =  i kappa v - I(t),   v'(t) = i kappa u + I(t),
    I(t)  =  int_0^t K(t-tau) (u - v)(tau) dtau,

    u(0) = 1, v(0) = 0.  Same stepping scheme and product-form memory
    integral as ``center_amplitude_loop``.  Returns (u, v).
    """
    N = n_steps
    ik = 1j * kappa
    u = np.empty(N + 1, dtype=np.complex128)
    v = np.empty(N + 1, dtype=np.complex128)
    d = np.empty(N + 1, dtype=np.complex128)
    u[0], v[0] = 1.0, 0.0
    d[0] = 1.0
    gu, gv = ik * v[0], ik * u[0]
    w0 = weights[0]
    for k in range(N):
        K = k + 1
        core = np.dot(weights[K:0:-1], d[:K]) - edge[K] * d[0]
        up = u[k] + dt * gu
        vp = v[k] + dt * gv
        mem = core + w0 * (up - vp)
        gu_pred = ik * vp - mem
        gv_pred = ik * up + mem
        u[K] = u[k] + 0.5 * dt * (gu + gu_pred)
        v[K] = v[k] + 0.5 * dt * (gv + gv_pred)
        d[K] = u[K] - v[K]
        mem = core + w0 * d[K]
        gu = ik * v[K] - mem
        gv = ik * u[K] + mem
        if not (np.isfinite(u[K].real) and np.isfinite(u[K].imag)):
            raise FloatingPointError(
                f"coupled-pair integration produced a non-finite value "
                f"at step {K} (t = {K * dt:g})"
            )
    return u, v
