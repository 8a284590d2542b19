"""Shared solver configuration."""

from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and discretization knobs shared across the library.

    Attributes
    ----------
    bracket_step : float
        Step of the sign-change scan in the Bessel order nu.
    root_tol : float
        Absolute bisection tolerance for zeros in nu.
    residual_tol : float
        Largest |J_nu(z0)| accepted for a quantized state.
    energy_scan_steps : int
        Number of energy samples between -V0 and 0 in the oracle scan.
    energy_tol : float
        Absolute bisection tolerance for oracle eigenvalues.
    r_max_factor : float
        Default radial extent of oracle grids, in units of 1/beta.
    numerov_points : int
        Default grid size for the Numerov oracle (before refinement).
    fd_points : int
        Default grid size for the finite-difference oracle.
    norm_panels : int
        Gauss panels used for wavefunction normalization integrals.
    norm_tail_eps : float
        Relative weight below which the analytic wavefunction tail is cut.
    """

    bracket_step: float = 0.05
    root_tol: float = 1e-12
    residual_tol: float = 1e-8
    energy_scan_steps: int = 500
    energy_tol: float = 1e-11
    r_max_factor: float = 45.0
    numerov_points: int = 4501
    fd_points: int = 9001
    norm_panels: int = 2048
    norm_tail_eps: float = 1e-12

    def __post_init__(self):
        if self.bracket_step <= 0:
            raise ValueError("bracket_step must be positive")
        if self.root_tol <= 0 or self.energy_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.energy_scan_steps < 2:
            raise ValueError("energy_scan_steps must be at least 2")

    def describe(self) -> list[tuple[str, object]]:
        """(name, value) pairs of every knob, for reproducibility dumps."""
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


DEFAULT_CONFIG = SolverConfig()
