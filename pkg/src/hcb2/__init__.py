"""Two-type hard-core boson mean-field model: equilibrium states, phase
diagram, condensate density, plasmon fluctuation pairs, and a finite-lattice
exact-diagonalization oracle."""

__version__ = "0.1.0"

from .model import (
    CriticalBetaUndefinedError,
    DegenerateBoundaryError,
    DegenerateSpectrumError,
    DimensionCapError,
    InvalidRegimeError,
    ModelParams,
)
from .operators import (
    IDENTITY,
    OneSiteSpectrum,
    build_h_lambda,
    commutator,
    diagonalize_h,
    eta_value,
    expectation,
    gauge_unitary,
    gibbs_density,
    gibbs_weights,
    heisenberg_evolve,
    is_hermitian,
    particle_hole_unitary,
    pauli_site_operator,
    q_minus,
    q_plus,
    symmetry_unitary,
    type_exchange_unitary,
)
from .mean_field import (
    MeanFieldSolution,
    PhaseBoundary,
    classify_regime,
    condensate_bound,
    critical_beta,
    f_beta,
    free_energy_density,
    gap_fixed_points,
    gap_interval,
    ground_state_solution,
    phase_boundary,
    solve_gap,
    tricritical_kappa,
)
from .fluctuations import (
    PAIR_LABELS,
    FluctuationPair,
    PairId,
    build_EJE,
    build_all_pairs,
    build_pair,
    ccr_parameter,
    ccr_residual,
    commutator_dynamics_check,
    dynamics_residual,
    evolve,
    independence_matrix,
    max_cross_moment,
    measured_variances,
)
from .lattice import (
    LatticeObservables,
    LatticeSpec,
    build_lattice_hamiltonian,
    build_lattice_hamiltonian_unscaled,
    gibbs_lattice_expectation,
    lattice_observables,
    site_operator,
    symmetry_commutator_residuals,
    zero_mode_density,
)

__all__ = [
    "ModelParams",
    "InvalidRegimeError",
    "CriticalBetaUndefinedError",
    "DegenerateSpectrumError",
    "DegenerateBoundaryError",
    "DimensionCapError",
    "OneSiteSpectrum",
    "MeanFieldSolution",
    "PhaseBoundary",
    "FluctuationPair",
    "PairId",
    "LatticeSpec",
    "LatticeObservables",
    "PAIR_LABELS",
    "IDENTITY",
    "pauli_site_operator",
    "q_plus",
    "q_minus",
    "commutator",
    "is_hermitian",
    "eta_value",
    "build_h_lambda",
    "diagonalize_h",
    "gibbs_density",
    "gibbs_weights",
    "expectation",
    "type_exchange_unitary",
    "particle_hole_unitary",
    "gauge_unitary",
    "symmetry_unitary",
    "heisenberg_evolve",
    "f_beta",
    "gap_interval",
    "gap_fixed_points",
    "solve_gap",
    "critical_beta",
    "tricritical_kappa",
    "ground_state_solution",
    "condensate_bound",
    "free_energy_density",
    "classify_regime",
    "phase_boundary",
    "build_EJE",
    "build_pair",
    "build_all_pairs",
    "ccr_parameter",
    "ccr_residual",
    "commutator_dynamics_check",
    "dynamics_residual",
    "evolve",
    "measured_variances",
    "independence_matrix",
    "max_cross_moment",
    "site_operator",
    "build_lattice_hamiltonian",
    "build_lattice_hamiltonian_unscaled",
    "gibbs_lattice_expectation",
    "zero_mode_density",
    "symmetry_commutator_residuals",
    "lattice_observables",
]
