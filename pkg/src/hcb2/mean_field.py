"""Gap equation, phase diagram, and variational selection of the stable state.

The order parameter lambda = <s-_1> obeys a self-consistency condition that,
for lambda != 0, reduces to a scalar fixed-point problem

    eta = f_beta(eta),   f_beta(eta) = -t sinh(beta eta) / (cosh(beta U) + cosh(beta eta))

on the accessible interval I = [U, sqrt(U^2 + 2 t^2)], where
eta = sqrt(U^2 + 4 t^2 |lambda|^2).  f_beta is increasing and concave on I
and increasing in beta, which makes grid scanning plus bisection an
exhaustive and unconditionally convergent root finder.  Among the trivial
solution and all fixed points, the equilibrium one minimizes the variational
free energy `free_energy_density`, whose stationary points are exactly the
gap-equation solutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .model import (
    CriticalBetaUndefinedError,
    DegenerateBoundaryError,
    InvalidRegimeError,
    ModelParams,
)

PHASE_NORMAL = "normal"
PHASE_CONDENSED = "condensed"

REGIME_SECOND_ORDER = "second_order_safe"
REGIME_FIRST_ORDER = "possible_first_order"
REGIME_NO_CONDENSATION = "no_condensation"
REGIME_DEGENERATE = "degenerate_boundary"

DEFAULT_GRID_POINTS = 2048


@dataclass(frozen=True)
class MeanFieldSolution:
    """All gap-equation fixed points at given parameters plus the selected one.

    fixed_points : nontrivial eta roots found on I (the trivial lambda = 0
                   branch is always considered for selection but not listed)
    selected_eta : eta at the free-energy minimizer (equals U when normal)
    lambda_mod   : |lambda| of the minimizer; rho0 = 2 lambda_mod^2
    """

    params: ModelParams
    fixed_points: tuple[float, ...]
    selected_eta: float
    lambda_mod: float
    rho0: float
    phase: str
    regime: str
    free_energy: float
    gap_residual: float

    @property
    def condensed(self) -> bool:
        return self.phase == PHASE_CONDENSED


@dataclass(frozen=True)
class PhaseBoundary:
    """Critical line data at fixed (t, U).

    beta_c is None when 2U >= -t (no guaranteed continuous transition).
    """

    beta_c: float | None
    kappa: float
    case_a_possible: bool          # 2U < -t
    second_order_guaranteed: bool  # U < -t * kappa


def gap_interval(params: ModelParams) -> tuple[float, float]:
    """Accessible eta range [U, sqrt(U^2 + 2 t^2)] (condensate below total density)."""
    return params.U, math.hypot(params.U, math.sqrt(2.0) * abs(params.t))


def lambda_from_eta(eta: float, params: ModelParams) -> float:
    """Invert eta = sqrt(U^2 + 4 t^2 lambda^2) for |lambda| >= 0."""
    gap_sq = eta * eta - params.U * params.U
    if gap_sq <= 0.0:
        return 0.0
    return math.sqrt(gap_sq) / (2.0 * abs(params.t))


def eta_from_lambda(lambda_mod: float, params: ModelParams) -> float:
    return math.hypot(params.U, 2.0 * abs(params.t) * lambda_mod)


def f_beta(eta, params: ModelParams):
    """Thermal gap function -t sinh(beta eta) / (cosh(beta U) + cosh(beta eta)).

    Numerator and denominator are divided by exp(beta max(eta, U)) so the
    evaluation is overflow-safe for beta up to 1e3.  Accepts scalars or
    numpy arrays in eta.
    """
    if params.is_ground_state:
        raise ValueError("f_beta requires finite beta; the T=0 limit is a step function")
    beta, t, U = params.beta, params.t, params.U
    eta_arr = np.asarray(eta, dtype=float)
    if np.any(eta_arr < 0.0):
        raise ValueError("eta must be >= 0")
    m = np.maximum(eta_arr, U)
    e_eta = np.exp(beta * (eta_arr - m))
    e_eta_inv = np.exp(-beta * (eta_arr + m))
    e_u = np.exp(beta * (U - m))
    e_u_inv = np.exp(-beta * (U + m))
    out = -t * (e_eta - e_eta_inv) / (e_u + e_u_inv + e_eta + e_eta_inv)
    if out.ndim == 0:
        return float(out)
    return out


def _bisect(g, a: float, b: float, ga: float, gb: float, max_iter: int = 200) -> float:
    # a < b with g(a), g(b) of opposite sign; runs to float resolution
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        gm = g(m)
        if gm == 0.0:
            return m
        if (ga < 0.0) == (gm < 0.0):
            a, ga = m, gm
        else:
            b, gb = m, gm
    return 0.5 * (a + b)


def gap_fixed_points(params: ModelParams, grid_points: int = DEFAULT_GRID_POINTS) -> tuple[float, ...]:
    """All roots of eta = f_beta(eta) on the accessible interval.

    Sign changes are located on a uniform grid and refined by bisection;
    the grid must be fine enough to separate the (at most few) crossings,
    which monotonicity plus concavity of f_beta keeps well apart.
    """
    lo, hi = gap_interval(params)
    xs = np.linspace(lo, hi, grid_points)
    gs = f_beta(xs, params) - xs

    def g(eta: float) -> float:
        return f_beta(eta, params) - eta

    roots: list[float] = []
    for k in range(grid_points - 1):
        if gs[k] == 0.0:
            roots.append(float(xs[k]))
        elif (gs[k] < 0.0) != (gs[k + 1] < 0.0):
            roots.append(_bisect(g, float(xs[k]), float(xs[k + 1]), float(gs[k]), float(gs[k + 1])))
    if gs[-1] == 0.0:
        roots.append(float(xs[-1]))

    deduped: list[float] = []
    for r in sorted(roots):
        if not deduped or r - deduped[-1] > 1e-9:
            deduped.append(r)
    return tuple(deduped)


def free_energy_density(params: ModelParams, lambda_mod: float) -> float:
    """Variational free energy per site of the product trial state,

        phi(|lambda|) = -(1/beta) ln(2 cosh(beta U) + 2 cosh(beta eta)) - 2 t |lambda|^2

    with eta = eta(|lambda|).  Its stationary points in |lambda| are exactly
    {0} union the gap-equation fixed points, so the global minimizer is the
    equilibrium selection rule (needed when a first-order scenario produces
    several fixed points).
    """
    if params.is_ground_state:
        raise ValueError("free_energy_density requires finite beta")
    beta, t, U = params.beta, params.t, params.U
    eta = eta_from_lambda(lambda_mod, params)
    eps = np.array([-U, U, eta, -eta])
    return float(-logsumexp(-beta * eps) / beta - 2.0 * t * lambda_mod * lambda_mod)


def tricritical_kappa() -> float:
    """Coupling ratio kappa in (0, 1/2) below which (U < -t kappa) the
    transition is guaranteed second order; the root of
    ln((1+2k)/(1-2k)) = 4k/(1-2k^2), bisected to float resolution."""

    def g(k: float) -> float:
        return math.log((1.0 + 2.0 * k) / (1.0 - 2.0 * k)) - 4.0 * k / (1.0 - 2.0 * k * k)

    a, b = 0.25, 0.499999999999
    return _bisect(g, a, b, g(a), g(b))


def critical_beta(params: ModelParams) -> float:
    """Closed-form critical inverse temperature
    beta_c = (1/2U) ln((-t + 2U)/(-t - 2U)), defined for 2U < -t."""
    t, U = params.t, params.U
    if t >= 0.0:
        raise InvalidRegimeError(f"critical_beta requires t < 0, got t={t}")
    if 2.0 * U >= -t:
        raise CriticalBetaUndefinedError(f"beta_c undefined: need 2U < -t, got U={U}, t={t}")
    if U == 0.0:
        return 2.0 / (-t)
    x = 2.0 * U / (-t)
    # log1p keeps full precision for U -> 0
    return (math.log1p(x) - math.log1p(-x)) / (2.0 * U)


def classify_regime(params: ModelParams) -> str:
    """Advisory coupling-window label; solve_gap stays authoritative.

    Boundaries U = -t and 2U = -t are open cases of the analysis and get an
    explicit degenerate label instead of a silent classification.
    """
    t, U = params.t, params.U
    if t >= 0.0:
        raise InvalidRegimeError(f"classify_regime requires t < 0, got t={t}")
    if U == -t or 2.0 * U == -t:
        return REGIME_DEGENERATE
    if U > -t:
        return REGIME_NO_CONDENSATION
    if U < -t * tricritical_kappa():
        return REGIME_SECOND_ORDER
    return REGIME_FIRST_ORDER


def condensate_bound(params: ModelParams) -> float:
    """Supremum (t^2 - U^2)/(2 t^2) of the condensate density over all beta;
    attained at T = 0 and strictly below the total density 1."""
    t, U = params.t, params.U
    if t >= 0.0:
        raise InvalidRegimeError(f"condensate_bound requires t < 0, got t={t}")
    if U >= -t:
        raise ValueError(f"condensate_bound requires U < -t, got U={U}, t={t}")
    return (t * t - U * U) / (2.0 * t * t)


def ground_state_solution(params: ModelParams) -> MeanFieldSolution:
    """T = 0 branch: the thermal gap function degenerates to a step, giving a
    unique nontrivial solution eta = -t iff U < -t."""
    if not params.is_physical:
        raise InvalidRegimeError(f"ground state solution requires t < 0, got t={params.t}")
    t, U = params.t, params.U
    if U == -t:
        raise DegenerateBoundaryError(f"U = -t = {U} is a degenerate boundary of the T=0 analysis")
    regime = classify_regime(params)
    if U > -t:
        return MeanFieldSolution(
            params=params,
            fixed_points=(),
            selected_eta=U,
            lambda_mod=0.0,
            rho0=0.0,
            phase=PHASE_NORMAL,
            regime=regime,
            free_energy=-U,
            gap_residual=0.0,
        )
    eta = -t
    lambda_mod = math.sqrt(t * t - U * U) / (2.0 * abs(t))
    rho0 = (t * t - U * U) / (2.0 * t * t)
    # ground-state energy density of the condensed product state
    free_energy = -eta - 2.0 * t * lambda_mod * lambda_mod
    return MeanFieldSolution(
        params=params,
        fixed_points=(eta,),
        selected_eta=eta,
        lambda_mod=lambda_mod,
        rho0=rho0,
        phase=PHASE_CONDENSED,
        regime=regime,
        free_energy=free_energy,
        gap_residual=0.0,
    )


def solve_gap(params: ModelParams, grid_points: int = DEFAULT_GRID_POINTS) -> MeanFieldSolution:
    """Enumerate all gap-equation fixed points and select the stable one.

    The trivial lambda = 0 solution always competes; the free-energy
    minimizer wins (ties go to the normal state).  beta = inf is routed to
    the closed-form ground-state branch.
    """
    if not params.is_physical:
        raise InvalidRegimeError(f"gap equation has no solutions for t >= 0, got t={params.t}")
    if params.is_ground_state:
        return ground_state_solution(params)

    roots = gap_fixed_points(params, grid_points=grid_points)
    candidates = [0.0] + [lambda_from_eta(r, params) for r in roots]
    energies = [free_energy_density(params, lam) for lam in candidates]
    best = int(np.argmin(energies))
    lambda_mod = candidates[best]
    eta = eta_from_lambda(lambda_mod, params)
    condensed = lambda_mod > 0.0
    residual = abs(eta - f_beta(eta, params)) if condensed else 0.0
    return MeanFieldSolution(
        params=params,
        fixed_points=roots,
        selected_eta=eta,
        lambda_mod=lambda_mod,
        rho0=2.0 * lambda_mod * lambda_mod,
        phase=PHASE_CONDENSED if condensed else PHASE_NORMAL,
        regime=classify_regime(params),
        free_energy=energies[best],
        gap_residual=residual,
    )


def phase_boundary(params: ModelParams) -> PhaseBoundary:
    """Critical data at (t, U): beta_c when it exists, kappa, and the
    coupling-window flags."""
    if params.t >= 0.0:
        raise InvalidRegimeError(f"phase_boundary requires t < 0, got t={params.t}")
    kappa = tricritical_kappa()
    case_a = 2.0 * params.U < -params.t
    beta_c = critical_beta(params) if case_a else None
    return PhaseBoundary(
        beta_c=beta_c,
        kappa=kappa,
        case_a_possible=case_a,
        second_order_guaranteed=params.U < -params.t * kappa,
    )
