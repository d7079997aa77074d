"""Canonical fluctuation pairs of the broken gauge symmetry and their dynamics.

In a condensed state the central-limit fluctuations of the gauge generators
Q+- = sz_1 +- sz_2 organize into four canonical (X, P) pairs.  Each pair is
built from one off-diagonal block of a generator in the eigenbasis of
h_lambda:

    E_ij(A)  = P_i A P_j + P_j A P_i
    JE_ij(A) = i (P_i A P_j - P_j A P_i)

Only four (index pair, generator) combinations survive the type-exchange and
particle-hole selection rules:

    label  (i, j)  generator  frequency   X sign
    02     (0, 2)  Q-         xi+ = eta+U   -
    13     (1, 3)  Q+         xi+           +
    03     (0, 3)  Q-         xi- = eta-U   +
    12     (1, 2)  Q+         xi-           -

Every surviving pair is a harmonic oscillator at its frequency.  The scalar
fingerprints computed here are the Gibbs-state traces that characterize the
pairs completely: the commutator c-number (an effective Planck constant
hbar+-), the X/P variances, and the cross moments whose vanishing proves the
four pairs independent, hence each frequency two-fold degenerate.  Note the
crossing: frequency-xi+ pairs carry hbar+ = (4 xi-/eta) tanh(beta xi+/2) and
variance 2 xi-/eta, and vice versa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DegenerateSpectrumError, ModelParams
from .operators import (
    OneSiteSpectrum,
    commutator,
    diagonalize_h,
    expectation,
    gibbs_weights,
    heisenberg_evolve,
    q_minus,
    q_plus,
)

PAIR_LABELS = ("02", "13", "03", "12")

# label -> (i, j, generator, frequency class, sign on X, sign s in [h, E] = s i xi JE)
_PAIR_TABLE = {
    "02": (0, 2, "Q-", "xi+", -1, +1),
    "13": (1, 3, "Q+", "xi+", +1, -1),
    "03": (0, 3, "Q-", "xi-", +1, -1),
    "12": (1, 2, "Q+", "xi-", -1, +1),
}


@dataclass(frozen=True)
class PairId:
    label: str
    generator: str        # "Q+" or "Q-"
    frequency_class: str  # "xi+" or "xi-"


@dataclass(frozen=True)
class FluctuationPair:
    """One canonical pair with its closed-form scalars and matrix realizations.

    n, hbar, variance, frequency are the predicted values at (params, lam);
    E_op/JE_op are the microscopic matrices (None at lam = 0, where the pair
    is degenerate and only the limit values remain meaningful).
    """

    id: PairId
    i: int
    j: int
    x_sign: int
    comm_sign: int
    n: float
    hbar: float
    variance: float
    frequency: float
    E_op: np.ndarray | None
    JE_op: np.ndarray | None
    degenerate: bool


def generator_matrix(name: str) -> np.ndarray:
    if name == "Q+":
        return q_plus()
    if name == "Q-":
        return q_minus()
    raise ValueError(f"unknown generator {name!r}")


def build_EJE(i: int, j: int, a: np.ndarray, spectrum: OneSiteSpectrum) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian block pair (E_ij(a), JE_ij(a)) for i < j."""
    if not 0 <= i < j <= 3:
        raise ValueError(f"need 0 <= i < j <= 3, got ({i}, {j})")
    upper = spectrum.projections[i] @ a @ spectrum.projections[j]
    lower = spectrum.projections[j] @ a @ spectrum.projections[i]
    return upper + lower, 1j * (upper - lower)


def build_pair(label: str, params: ModelParams, lam: float) -> FluctuationPair:
    """Assemble one canonical pair at order parameter lam (real gauge).

    At t*lam = 0 the pair degenerates: operators are not defined, but the
    closed-form scalars are still evaluated at eta = U and returned as the
    limiting values (hbar -> 0 for all pairs; variance -> 0 for the xi+
    pairs and -> 4 for the xi- pairs).
    """
    if label not in _PAIR_TABLE:
        raise ValueError(f"unknown pair label {label!r}; expected one of {PAIR_LABELS}")
    if params.is_ground_state:
        raise ValueError("fluctuation pairs require finite beta")
    i, j, gen, fclass, x_sign, comm_sign = _PAIR_TABLE[label]
    U, beta = params.U, params.beta
    eta = math.hypot(U, 2.0 * abs(params.t * lam))
    if eta == 0.0:
        raise DegenerateSpectrumError("fluctuation pairs undefined at U = 0 with lambda = 0")
    xi_plus = eta + U
    xi_minus = eta - U
    if fclass == "xi+":
        frequency = xi_plus
        hbar = (4.0 * xi_minus / eta) * math.tanh(beta * xi_plus / 2.0)
        variance = 2.0 * xi_minus / eta
    else:
        frequency = xi_minus
        hbar = (4.0 * xi_plus / eta) * math.tanh(beta * xi_minus / 2.0)
        variance = 2.0 * xi_plus / eta

    weights = gibbs_weights(np.array([-U, U, eta, -eta]), beta)
    n = math.sqrt(weights[i] + weights[j])

    degenerate = eta - U <= 0.0
    if degenerate:
        e_op = je_op = None
    else:
        spectrum = diagonalize_h(params, lam)
        e_op, je_op = build_EJE(i, j, generator_matrix(gen), spectrum)

    return FluctuationPair(
        id=PairId(label=label, generator=gen, frequency_class=fclass),
        i=i,
        j=j,
        x_sign=x_sign,
        comm_sign=comm_sign,
        n=n,
        hbar=hbar,
        variance=variance,
        frequency=frequency,
        E_op=e_op,
        JE_op=je_op,
        degenerate=degenerate,
    )


def build_all_pairs(params: ModelParams, lam: float) -> list[FluctuationPair]:
    return [build_pair(label, params, lam) for label in PAIR_LABELS]


def commutator_dynamics_check(pair: FluctuationPair, h: np.ndarray) -> float:
    """Max residual of [h, E] = s i xi JE and [h, JE] = -s i xi E for the
    pair's pinned sign s."""
    s, xi = pair.comm_sign, pair.frequency
    r1 = commutator(h, pair.E_op) - s * 1j * xi * pair.JE_op
    r2 = commutator(h, pair.JE_op) + s * 1j * xi * pair.E_op
    return float(max(np.max(np.abs(r1)), np.max(np.abs(r2))))


def ccr_parameter(pair: FluctuationPair, rho: np.ndarray) -> complex:
    """c-number omega([E, JE]) of the pair in the state rho."""
    return expectation(rho, commutator(pair.E_op, pair.JE_op))


def ccr_residual(pair: FluctuationPair, rho: np.ndarray) -> float:
    """|omega([E, JE]) - x_sign i n^2 hbar|; zero when [X, P] = i hbar holds."""
    predicted = pair.x_sign * 1j * pair.n * pair.n * pair.hbar
    return abs(ccr_parameter(pair, rho) - predicted)


def measured_variances(pair: FluctuationPair, rho: np.ndarray) -> tuple[float, float]:
    """(omega(E^2), omega(JE^2)) / n^2, to compare against pair.variance."""
    n2 = pair.n * pair.n
    ve = expectation(rho, pair.E_op @ pair.E_op).real / n2
    vj = expectation(rho, pair.JE_op @ pair.JE_op).real / n2
    return float(ve), float(vj)


def evolve(pair: FluctuationPair, time: float) -> np.ndarray:
    """Rotation advancing (X, P) by time t:  [[cos, sin], [-sin, cos]] at the
    pair frequency.  Orthogonal, hence symplectic: the CCR is preserved."""
    c = math.cos(pair.frequency * time)
    s = math.sin(pair.frequency * time)
    return np.array([[c, s], [-s, c]])


def dynamics_residual(pair: FluctuationPair, spectrum: OneSiteSpectrum, time: float) -> float:
    """Compare exp(iht) (E, JE) exp(-iht) against the closed rotation.

    At the matrix level the rotation reads E(t) = cos(xi t) E + x_sign
    sin(xi t) JE and JE(t) = -x_sign sin(xi t) E + cos(xi t) JE.
    """
    c = math.cos(pair.frequency * time)
    s = math.sin(pair.frequency * time)
    e_t = heisenberg_evolve(pair.E_op, spectrum, time)
    je_t = heisenberg_evolve(pair.JE_op, spectrum, time)
    r1 = e_t - (c * pair.E_op + pair.x_sign * s * pair.JE_op)
    r2 = je_t - (-pair.x_sign * s * pair.E_op + c * pair.JE_op)
    return float(max(np.max(np.abs(r1)), np.max(np.abs(r2))))


def pair_operators(pairs: list[FluctuationPair]) -> list[np.ndarray]:
    """Flatten to [E, JE] per pair, in the order the pairs are given."""
    ops: list[np.ndarray] = []
    for p in pairs:
        ops.extend([p.E_op, p.JE_op])
    return ops


def independence_matrix(pairs: list[FluctuationPair], rho: np.ndarray) -> np.ndarray:
    """8x8 second-moment table omega(A B) over the flattened operators."""
    ops = pair_operators(pairs)
    m = np.empty((len(ops), len(ops)), dtype=complex)
    for a, op_a in enumerate(ops):
        for b, op_b in enumerate(ops):
            m[a, b] = expectation(rho, op_a @ op_b)
    return m


def max_cross_moment(pairs: list[FluctuationPair], rho: np.ndarray) -> float:
    """Largest |omega(A B)| with A, B from *different* pairs; its vanishing
    makes the pairs independent and the two frequencies two-fold degenerate."""
    m = independence_matrix(pairs, rho)
    worst = 0.0
    for a in range(m.shape[0]):
        for b in range(m.shape[1]):
            if a // 2 != b // 2:
                worst = max(worst, abs(m[a, b]))
    return worst
