import numpy as np
import pytest
from scipy.special import gamma as gamma_fn

from cvchannel import (
    SpectralDensity,
    build_kernel_table,
    evaluate_density,
    kernel_closed,
    kernel_quadrature,
)

ETA, WC = 0.005, 30.0


@pytest.mark.parametrize("n", [0.5, 1.0, 3.0])
def test_density_nonnegative_and_zero_at_origin(n):
    sd = SpectralDensity(n, ETA, WC)
    w = np.linspace(0.0, 300.0, 4001)
    j = evaluate_density(sd, w)
    assert j[0] == 0.0
    assert np.all(j >= 0.0)


def test_density_at_cutoff_all_exponents_coincide():
    # (w/w_c)^(n-1) = 1 at w = w_c
    expected = ETA * WC / np.e  # 0.0551819161757...
    for n in (0.5, 1.0, 3.0):
        sd = SpectralDensity(n, ETA, WC)
        assert evaluate_density(sd, WC) == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(0.05518191617571635, rel=1e-12)


def test_density_rejects_negative_frequency():
    sd = SpectralDensity.ohmic(ETA, WC)
    with pytest.raises(ValueError, match="omega"):
        evaluate_density(sd, -1.0)


def test_spectral_density_validation():
    with pytest.raises(ValueError, match="n must be > 0"):
        SpectralDensity(0.0, ETA, WC)
    with pytest.raises(ValueError, match="eta"):
        SpectralDensity(1.0, -0.1, WC)
    with pytest.raises(ValueError, match="omega_c"):
        SpectralDensity(1.0, ETA, 0.0)


def test_presets():
    assert SpectralDensity.ohmic(ETA, WC).n == 1.0
    assert SpectralDensity.sub_ohmic(ETA, WC).n == 0.5
    assert SpectralDensity.super_ohmic(ETA, WC).n == 3.0


def test_kernel_closed_ohmic_anchor_values():
    sd = SpectralDensity.ohmic(ETA, WC)
    assert kernel_closed(sd, 0.0) == pytest.approx(4.5 + 0.0j, abs=1e-14)
    # w_c tau = 1: 4.5/(1+i)^2 = -2.25i
    assert kernel_closed(sd, 1.0 / 30.0) == pytest.approx(-2.25j, abs=1e-13)


@pytest.mark.parametrize(
    "n,g", [(0.5, np.sqrt(np.pi) / 2.0), (1.0, 1.0), (3.0, 6.0)]
)
def test_kernel_at_zero_is_gamma_function(n, g):
    sd = SpectralDensity(n, ETA, WC)
    mu0 = kernel_closed(sd, 0.0)
    assert mu0.imag == 0.0
    assert mu0.real == pytest.approx(ETA * WC**2 * g, rel=1e-13)
    # quadrature oracle reproduces the gamma-function identity independently
    assert kernel_quadrature(sd, 0.0, tol=1e-12) == pytest.approx(mu0, rel=1e-10)


@pytest.mark.parametrize("n", [0.5, 1.0, 3.0])
def test_kernel_magnitude_decays(n):
    sd = SpectralDensity(n, ETA, WC)
    tau = np.linspace(0.0, 20.0, 2001)
    mags = np.abs(kernel_closed(sd, tau))
    assert np.all(np.diff(mags) <= 0.0)
    assert mags[-1] < 1e-3 * mags[0]


@pytest.mark.parametrize("n", [0.5, 1.0, 3.0])
def test_kernel_closed_vs_quadrature(n):
    sd = SpectralDensity(n, ETA, WC)
    mu0 = abs(kernel_closed(sd, 0.0))
    for tau in (0.0, 1e-3, 1.0 / 30.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
        diff = abs(kernel_closed(sd, tau) - kernel_quadrature(sd, tau, tol=1e-12))
        assert diff / mu0 < 1e-8, f"tau={tau}"


@pytest.mark.parametrize("tau", [0.02, 1.0 / 30.0, 0.7, 4.0])
def test_kernel_hermitian_symmetry_by_quadrature(tau):
    sd = SpectralDensity.sub_ohmic(ETA, WC)
    plus = kernel_quadrature(sd, tau, tol=1e-12)
    minus = kernel_quadrature(sd, -tau, tol=1e-12)
    assert minus == pytest.approx(np.conj(plus), abs=1e-12)
    assert kernel_closed(sd, -tau) == np.conj(kernel_closed(sd, tau))


def test_kernel_quadrature_rejects_bad_tolerance():
    with pytest.raises(ValueError, match="tolerance"):
        kernel_quadrature(SpectralDensity.ohmic(ETA, WC), 1.0, tol=0.0)


def test_kernel_table_matches_closed_form():
    sd = SpectralDensity.ohmic(ETA, WC)
    table = build_kernel_table(sd, dt=1.0 / 30.0, n_steps=2)
    assert table.values[0] == pytest.approx(4.5 + 0.0j, abs=1e-14)
    assert table.values[1] == pytest.approx(-2.25j, abs=1e-13)
    np.testing.assert_allclose(
        table.values, kernel_closed(sd, np.arange(3) / 30.0), rtol=0, atol=1e-15
    )


def test_kernel_table_single_entry():
    sd = SpectralDensity.super_ohmic(ETA, WC)
    table = build_kernel_table(sd, dt=0.1, n_steps=1)
    assert len(table.values) == 2
    assert table.values[0] == kernel_closed(sd, 0.0)


def test_kernel_table_hermitian_pairs():
    sd = SpectralDensity.sub_ohmic(ETA, WC)
    table = build_kernel_table(sd, dt=0.05, n_steps=40)
    taus = -np.arange(41) * 0.05
    np.testing.assert_allclose(
        table.values, np.conj(kernel_closed(sd, taus)), rtol=0, atol=1e-15
    )


def test_kernel_table_resource_and_usage_errors():
    sd = SpectralDensity.ohmic(ETA, WC)
    with pytest.raises(ValueError, match="exceeds the supported size"):
        build_kernel_table(sd, dt=1e-9, n_steps=10**9)
    with pytest.raises(ValueError, match="dt"):
        build_kernel_table(sd, dt=0.0, n_steps=10)
    with pytest.raises(ValueError, match="n_steps"):
        build_kernel_table(sd, dt=0.1, n_steps=0)
