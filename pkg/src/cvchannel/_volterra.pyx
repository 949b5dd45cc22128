# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Volterra predictor-corrector loops (hot O(N^2) kernels).

Same contract as ``_volterra_py``; see there for the scheme.  The history
sum runs over split re/im buffers with the weights stored reversed, so both
streams are contiguous and forward: a plain dual-FMA reduction the C
compiler can vectorize.
"""
import numpy as np

from libc.math cimport isfinite

BACKEND_NAME = "compiled"


cdef inline void history_sum(const double* wr, const double* wi,
                             const double* yr, const double* yi,
                             Py_ssize_t K, Py_ssize_t N,
                             double* out_re, double* out_im) nogil:
    # sum_{i=0}^{K-1} W[K-i] * y[i]  with  wr/wi holding W reversed:
    # wr[N - m] = Re W[m], so W[K-i] sits at index N - K + i.
    cdef double acc_re = 0.0, acc_im = 0.0
    cdef Py_ssize_t i, base = N - K
    for i in range(K):
        acc_re += wr[base + i] * yr[i] - wi[base + i] * yi[i]
        acc_im += wr[base + i] * yi[i] + wi[base + i] * yr[i]
    out_re[0] = acc_re
    out_im[0] = acc_im


def center_amplitude_loop(const double complex[::1] weights,
                          const double complex[::1] edge,
                          double dt, Py_ssize_t n_steps):
    cdef Py_ssize_t N = n_steps
    w_rev = np.ascontiguousarray(np.asarray(weights)[::-1])
    wr_arr = np.ascontiguousarray(w_rev.real)
    wi_arr = np.ascontiguousarray(w_rev.imag)
    phi_re = np.empty(N + 1)
    phi_im = np.empty(N + 1)
    deriv_arr = np.empty(N + 1, dtype=np.complex128)
    cdef const double[::1] wr = wr_arr
    cdef const double[::1] wi = wi_arr
    cdef double[::1] pr = phi_re
    cdef double[::1] pi = phi_im
    cdef double complex[::1] deriv = deriv_arr
    cdef double complex core, pred, g_pred, g_prev, phi_new, w0 = weights[0]
    cdef double core_re, core_im
    cdef Py_ssize_t k, K
    cdef bint ok = True
    pr[0] = 1.0
    pi[0] = 0.0
    deriv[0] = 0.0
    g_prev = 0.0
    with nogil:
        for k in range(N):
            K = k + 1
            history_sum(&wr[0], &wi[0], &pr[0], &pi[0], K, N, &core_re, &core_im)
            core = (core_re + 1j * core_im) - edge[K] * (pr[0] + 1j * pi[0])
            pred = (pr[k] + 1j * pi[k]) + dt * g_prev
            g_pred = -2.0 * (core + w0 * pred)
            phi_new = (pr[k] + 1j * pi[k]) + 0.5 * dt * (g_prev + g_pred)
            pr[K] = phi_new.real
            pi[K] = phi_new.imag
            g_prev = -2.0 * (core + w0 * phi_new)
            deriv[K] = g_prev
            if not (isfinite(phi_new.real) and isfinite(phi_new.imag)):
                ok = False
                break
    if not ok:
        raise FloatingPointError(
            f"center-amplitude integration produced a non-finite value "
            f"at step {K} (t = {K * dt:g})"
        )
    return phi_re + 1j * phi_im, deriv_arr


def coupled_pair_loop(const double complex[::1] weights,
                      const double complex[::1] edge,
                      double dt, Py_ssize_t n_steps, double kappa):
    cdef Py_ssize_t N = n_steps
    w_rev = np.ascontiguousarray(np.asarray(weights)[::-1])
    wr_arr = np.ascontiguousarray(w_rev.real)
    wi_arr = np.ascontiguousarray(w_rev.imag)
    u_arr = np.empty(N + 1, dtype=np.complex128)
    v_arr = np.empty(N + 1, dtype=np.complex128)
    d_re = np.empty(N + 1)
    d_im = np.empty(N + 1)
    cdef const double[::1] wr = wr_arr
    cdef const double[::1] wi = wi_arr
    cdef double complex[::1] u = u_arr
    cdef double complex[::1] v = v_arr
    cdef double[::1] dr = d_re
    cdef double[::1] di = d_im
    cdef double complex ik = 1j * kappa
    cdef double complex core, up, vp, mem, gu, gv, gu_pred, gv_pred, d_new
    cdef double complex w0 = weights[0]
    cdef double core_re, core_im
    cdef Py_ssize_t k, K
    cdef bint ok = True
    u[0] = 1.0
    v[0] = 0.0
    dr[0] = 1.0
    di[0] = 0.0
    gu = ik * v[0]
    gv = ik * u[0]
    with nogil:
        for k in range(N):
            K = k + 1
            history_sum(&wr[0], &wi[0], &dr[0], &di[0], K, N, &core_re, &core_im)
            core = (core_re + 1j * core_im) - edge[K] * (dr[0] + 1j * di[0])
            up = u[k] + dt * gu
            vp = v[k] + dt * gv
            mem = core + w0 * (up - vp)
            gu_pred = ik * vp - mem
            gv_pred = ik * up + mem
            u[K] = u[k] + 0.5 * dt * (gu + gu_pred)
            v[K] = v[k] + 0.5 * dt * (gv + gv_pred)
            d_new = u[K] - v[K]
            dr[K] = d_new.real
            di[K] = d_new.imag
            mem = core + w0 * d_new
            gu = ik * v[K] - mem
            gv = ik * u[K] + mem
            if not (isfinite(d_new.real) and isfinite(d_new.imag)):
                ok = False
                break
    if not ok:
        raise FloatingPointError(
            f"coupled-pair integration produced a non-finite value "
            f"at step {K} (t = {K * dt:g})"
        )
    return u_arr, v_arr
