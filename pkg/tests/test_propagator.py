import numpy as np
import pytest

from cvchannel import (
    ModelConfig,
    SpectralDensity,
    assemble_trajectory,
    solve_center_amplitude,
    solve_trajectory,
    solve_uv_direct,
)
from conftest import ETA, KAPPA, OMEGA_C, bath


def test_config_validation():
    with pytest.raises(ValueError, match="dt"):
        ModelConfig(kappa=0.5, t_max=1.0, dt=0.0)
    with pytest.raises(ValueError, match="t_max"):
        ModelConfig(kappa=0.5, t_max=1e-4, dt=1e-3)
    with pytest.raises(ValueError, match="exceeds the supported size"):
        ModelConfig(kappa=0.5, t_max=1e6, dt=1e-5)


def test_initial_conditions_and_sdot():
    traj = solve_trajectory(bath(1.0), ModelConfig(kappa=KAPPA, t_max=0.5, dt=1e-3))
    assert traj.u[0] == 1.0 + 0.0j
    assert traj.v[0] == 0.0 + 0.0j
    assert traj.s[0] == 1.0 + 0.0j
    # empty memory integral: s'(0) = -i(w0 + kappa)
    assert traj.sdot[0] == pytest.approx(-1j * (1.0 + KAPPA), abs=1e-14)


def test_free_solution_is_exact_without_bath():
    # eta = 0 removes the kernel; the rotating-frame stepper is then exact
    cfg = ModelConfig(kappa=KAPPA, t_max=10.0, dt=1e-3)
    s, sdot = solve_center_amplitude(SpectralDensity(1.0, 0.0, OMEGA_C), cfg)
    exact = np.exp(-1j * (1.0 + KAPPA) * cfg.times)
    assert np.max(np.abs(s - exact)) < 1e-8
    traj = assemble_trajectory(s, sdot, cfg)
    np.testing.assert_allclose(traj.u, np.exp(-1j * cfg.times) * np.cos(KAPPA * cfg.times),
                               rtol=0, atol=1e-8)
    np.testing.assert_allclose(traj.v, 1j * np.exp(-1j * cfg.times) * np.sin(KAPPA * cfg.times),
                               rtol=0, atol=1e-8)


def test_uncoupled_closed_system():
    # eta = 0, kappa = 0: u rotates at the field frequency, v stays zero
    cfg = ModelConfig(kappa=0.0, t_max=5.0, dt=1e-3)
    traj = solve_trajectory(SpectralDensity(1.0, 0.0, OMEGA_C), cfg)
    np.testing.assert_allclose(traj.u, np.exp(-1j * cfg.times), rtol=0, atol=1e-12)
    np.testing.assert_allclose(traj.v, 0.0, rtol=0, atol=1e-12)


def test_assemble_relative_mode_identity_is_structural(default_runs):
    for n, (traj, _) in default_runs.items():
        c_exact = np.exp(-1j * (1.0 - KAPPA) * traj.times)
        assert np.max(np.abs(traj.u + traj.v - c_exact)) < 1e-15, f"n={n}"
        np.testing.assert_allclose(traj.u, (traj.c + traj.s) / 2.0, rtol=0, atol=0)
        np.testing.assert_allclose(traj.v, (traj.c - traj.s) / 2.0, rtol=0, atol=0)


def test_assemble_rejects_mismatched_lengths():
    cfg = ModelConfig(kappa=0.5, t_max=1.0, dt=1e-3)
    s = np.ones(10, dtype=complex)
    with pytest.raises(ValueError, match="grid"):
        assemble_trajectory(s, s, cfg)


def test_center_amplitude_decays_and_stays_bounded(default_runs):
    traj, _ = default_runs[1.0]
    amp2 = np.abs(traj.s) ** 2
    assert np.max(np.abs(traj.s)) <= 1.0 + 1e-6
    # long-time decay: tail below the frozen measured level and decreasing
    # (|s(50)|^2 = 0.0298 at these parameters)
    i50 = int(round(50.0 / 1e-3))
    assert amp2[i50] < 0.05
    tail = amp2[i50 - 5000 : i50 : 500]
    assert np.all(np.diff(tail) < 0.0)


@pytest.mark.parametrize("n", [0.5, 1.0, 3.0])
def test_richardson_dt_halving(n):
    cfg1 = ModelConfig(kappa=KAPPA, t_max=20.0, dt=1e-3)
    cfg2 = ModelConfig(kappa=KAPPA, t_max=20.0, dt=5e-4)
    s1, _ = solve_center_amplitude(bath(n), cfg1)
    s2, _ = solve_center_amplitude(bath(n), cfg2)
    assert np.max(np.abs(s1 - s2[::2])) < 1e-5


def test_uv_direct_matches_free_solution():
    cfg = ModelConfig(kappa=KAPPA, t_max=10.0, dt=1e-3)
    u, v = solve_uv_direct(SpectralDensity(1.0, 0.0, OMEGA_C), cfg)
    assert np.max(np.abs(u - np.exp(-1j * cfg.times) * np.cos(KAPPA * cfg.times))) < 1e-6
    assert np.max(np.abs(v - 1j * np.exp(-1j * cfg.times) * np.sin(KAPPA * cfg.times))) < 1e-6


@pytest.mark.parametrize("n", [0.5, 1.0, 3.0])
def test_uv_direct_equivalent_to_assembled(n):
    cfg = ModelConfig(kappa=KAPPA, t_max=20.0, dt=1e-3)
    traj = solve_trajectory(bath(n), cfg)
    u_d, v_d = solve_uv_direct(bath(n), cfg)
    assert np.max(np.abs(u_d - traj.u)) < 1e-6
    assert np.max(np.abs(v_d - traj.v)) < 1e-6
    # conservation of the relative mode holds numerically in the direct solve
    c_exact = np.exp(-1j * (1.0 - KAPPA) * cfg.times)
    assert np.max(np.abs(u_d + v_d - c_exact)) < 1e-6


def test_trajectory_is_immutable():
    traj = solve_trajectory(bath(1.0), ModelConfig(kappa=KAPPA, t_max=0.1, dt=1e-3))
    with pytest.raises(ValueError):
        traj.s[0] = 0.0
