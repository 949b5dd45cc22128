"""Exact entanglement dynamics of a two-mode squeezed channel coupled to a
common zero-temperature structured environment.

Pipeline: spectral density -> memory-kernel Volterra solve for the
propagator amplitudes -> time-dependent master-equation coefficients ->
Gaussian moment propagation -> covariance matrices -> logarithmic
negativity.  See the ``cli`` module / ``cvchannel`` script for the scenario
runner.
"""
from ._backend import BACKEND as backend_name
from .bath import (
    KernelTable,
    SpectralDensity,
    build_kernel_table,
    evaluate_density,
    kernel_closed,
    kernel_quadrature,
)
from .coefficients import MasterCoefficients, frequency_shifts, master_coefficients
from .entanglement import (
    SymplecticSpectrum,
    log_negativity,
    partial_transpose,
    symplectic_spectrum,
    symplectic_spectrum_oracle,
)
from .gaussian import (
    BCoefficients,
    MomentSeries,
    NormalModeMoments,
    appendix_b_coefficients,
    covariance_from_moments,
    initial_normal_moments,
    moment_ode_oracle,
    propagate_moments,
)
from .propagator import (
    OMEGA_0,
    ModelConfig,
    PropagatorTrajectory,
    assemble_trajectory,
    solve_center_amplitude,
    solve_trajectory,
    solve_uv_direct,
)
from .scenarios import PRESETS, RunRecord, Scenario, preset, run_scenario, sweep

__version__ = "0.1.0"

__all__ = [
    "BCoefficients",
    "KernelTable",
    "MasterCoefficients",
    "ModelConfig",
    "MomentSeries",
    "NormalModeMoments",
    "OMEGA_0",
    "PRESETS",
    "PropagatorTrajectory",
    "RunRecord",
    "Scenario",
    "SpectralDensity",
    "SymplecticSpectrum",
    "appendix_b_coefficients",
    "assemble_trajectory",
    "backend_name",
    "build_kernel_table",
    "covariance_from_moments",
    "evaluate_density",
    "frequency_shifts",
    "initial_normal_moments",
    "kernel_closed",
    "kernel_quadrature",
    "log_negativity",
    "master_coefficients",
    "moment_ode_oracle",
    "partial_transpose",
    "preset",
    "propagate_moments",
    "run_scenario",
    "solve_center_amplitude",
    "solve_trajectory",
    "solve_uv_direct",
    "sweep",
    "symplectic_spectrum",
    "symplectic_spectrum_oracle",
    "__version__",
]
