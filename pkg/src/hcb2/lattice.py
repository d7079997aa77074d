"""Brute-force finite-lattice oracle on the complete graph.

Dense exact diagonalization of

    H = (t/N) sum_alpha sum_{i != j} s+_{i,alpha} s-_{j,alpha}
        + U sum_i sz_{i,1} sz_{i,2}

on N sites (Hilbert dimension 4^N), the all-to-all geometry whose N -> inf
equilibrium is the one-site mean-field problem.  The finite-volume Gibbs
state is gauge invariant, so condensation shows up as off-diagonal
long-range order in the zero-quasi-momentum occupation, never as a
nonvanishing <s->.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp

from .model import DimensionCapError, ModelParams
from . import operators as ops

DEFAULT_SITE_CAP = 5


@dataclass(frozen=True)
class LatticeSpec:
    """Finite complete-graph system; dimension 4^n_sites.

    The dense workspace above n_sites = 5 (dim 1024) is large; raising
    site_cap to 6 is an explicit opt-in and warns about memory.
    """

    n_sites: int
    params: ModelParams
    site_cap: int = DEFAULT_SITE_CAP

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError(f"n_sites must be >= 1, got {self.n_sites}")
        if self.n_sites > self.site_cap:
            raise DimensionCapError(
                f"n_sites={self.n_sites} exceeds cap {self.site_cap} "
                f"(dimension 4^{self.n_sites}); raise site_cap explicitly to opt in"
            )
        if self.n_sites >= 6:
            warnings.warn(
                f"dense diagonalization at n_sites={self.n_sites} needs "
                f"~{(4 ** self.n_sites) ** 2 * 8 / 1e9:.1f} GB per matrix",
                ResourceWarning,
                stacklevel=2,
            )

    @property
    def dim(self) -> int:
        return 4 ** self.n_sites


@dataclass(frozen=True)
class LatticeObservables:
    """Finite-N Gibbs expectations and symmetry diagnostics."""

    zero_mode_density: float
    sigma_z_per_site: float
    energy_density: float
    symmetry_residuals: dict[str, float] = field(default_factory=dict)


def site_operator(a: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """Embed a one-site 4x4 operator at the given site (site 0 slowest index)."""
    left = 4 ** site
    right = 4 ** (n_sites - site - 1)
    out = a
    if left > 1:
        out = np.kron(np.eye(left), out)
    if right > 1:
        out = np.kron(out, np.eye(right))
    return out


def _collective_lowering(spec: LatticeSpec, particle_type: int) -> np.ndarray:
    sm = np.real(ops.pauli_site_operator(particle_type, "minus"))
    return sum(site_operator(sm, i, spec.n_sites) for i in range(spec.n_sites))


def _hopping_and_zero_mode(spec: LatticeSpec) -> tuple[np.ndarray, np.ndarray]:
    """(sum_alpha sum_{i != j} s+_i s-_j, zero-mode number operator n_0)."""
    n = spec.n_sites
    hop = np.zeros((spec.dim, spec.dim))
    n0 = np.zeros((spec.dim, spec.dim))
    for alpha in (1, 2):
        s_minus = _collective_lowering(spec, alpha)
        s_plus = s_minus.T
        pair_sum = s_plus @ s_minus
        n0 += pair_sum / n
        number = np.real(ops.pauli_site_operator(alpha, "plus") @ ops.pauli_site_operator(alpha, "minus"))
        on_site = sum(site_operator(number, i, n) for i in range(n))
        hop += pair_sum - on_site
    return hop, n0


def _zz_diagonal(spec: LatticeSpec) -> np.ndarray:
    zz = np.real(np.diag(ops.pauli_site_operator(1, "z") @ ops.pauli_site_operator(2, "z")))
    diag = np.zeros(spec.dim)
    for i in range(spec.n_sites):
        diag += np.real(np.diag(site_operator(np.diag(zz), i, spec.n_sites)))
    return diag


def build_lattice_hamiltonian(spec: LatticeSpec) -> np.ndarray:
    """Dense H in the half-filling form with the one-site interaction
    U sz_1 sz_2; this is the convention whose N -> inf limit is the
    mean-field one-site problem."""
    hop, _ = _hopping_and_zero_mode(spec)
    h = (spec.params.t / spec.n_sites) * hop
    h[np.diag_indices_from(h)] += spec.params.U * _zz_diagonal(spec)
    return h


def build_lattice_hamiltonian_unscaled(spec: LatticeSpec) -> np.ndarray:
    """Alternate constructor in the bare convention: interaction U n_1 n_2
    with chemical potential mu = U/2.  Differs from the half-filling form at
    coupling U/4 by the constant -N U/4 times the identity."""
    n, u = spec.n_sites, spec.params.U
    hop, _ = _hopping_and_zero_mode(spec)
    h = (spec.params.t / n) * hop
    number1 = np.real(np.diag(ops.pauli_site_operator(1, "plus") @ ops.pauli_site_operator(1, "minus")))
    number2 = np.real(np.diag(ops.pauli_site_operator(2, "plus") @ ops.pauli_site_operator(2, "minus")))
    diag = np.zeros(spec.dim)
    for i in range(n):
        n1 = np.real(np.diag(site_operator(np.diag(number1), i, n)))
        n2 = np.real(np.diag(site_operator(np.diag(number2), i, n)))
        diag += u * n1 * n2 - 0.5 * u * (n1 + n2)
    h[np.diag_indices_from(h)] += diag
    return h


def _gibbs_eigen(spec: LatticeSpec, h: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if spec.params.is_ground_state:
        raise ValueError("lattice Gibbs expectations require finite beta")
    evals, vecs = np.linalg.eigh(h)
    w = np.exp(-spec.params.beta * (evals - evals.min()))
    return evals, vecs, w / w.sum()


def _expect(vecs: np.ndarray, w: np.ndarray, a: np.ndarray) -> float:
    # diag of V^T A V without forming the full transform
    av = a @ vecs
    return float(np.einsum("ik,ik->k", vecs, av) @ w)


def gibbs_lattice_expectation(spec: LatticeSpec, a: np.ndarray) -> float:
    """Tr(exp(-beta H) a) / Tr(exp(-beta H)), computed in the eigenbasis with
    the spectral shift."""
    h = build_lattice_hamiltonian(spec)
    if a.shape != h.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {h.shape}")
    _, vecs, w = _gibbs_eigen(spec, h)
    return _expect(vecs, w, a)


def log_partition_function(spec: LatticeSpec, beta: float | None = None) -> float:
    """ln Tr exp(-beta H), overflow-safe."""
    b = spec.params.beta if beta is None else beta
    evals = np.linalg.eigvalsh(build_lattice_hamiltonian(spec))
    return float(logsumexp(-b * evals))


def zero_mode_density(spec: LatticeSpec) -> float:
    """<n_0>/N with n_0 = (1/N) sum_alpha sum_{i,j} s+_{i,alpha} s-_{j,alpha},
    the finite-N proxy for the condensate density rho_0 = 2 |lambda|^2."""
    hop, n0 = _hopping_and_zero_mode(spec)
    h = (spec.params.t / spec.n_sites) * hop
    h[np.diag_indices_from(h)] += spec.params.U * _zz_diagonal(spec)
    _, vecs, w = _gibbs_eigen(spec, h)
    return _expect(vecs, w, n0) / spec.n_sites


def _digit_permutation(spec: LatticeSpec, one_site_map: np.ndarray) -> np.ndarray:
    """Global basis permutation applying a one-site basis relabeling at every
    site (site 0 is the most significant base-4 digit)."""
    idx = np.arange(spec.dim)
    out = np.zeros(spec.dim, dtype=np.int64)
    for s in range(spec.n_sites):
        shift = 4 ** (spec.n_sites - s - 1)
        out += one_site_map[(idx // shift) % 4] * shift
    return out


def swap_sites_permutation(spec: LatticeSpec, a: int, b: int) -> np.ndarray:
    """Basis permutation exchanging sites a and b."""
    idx = np.arange(spec.dim)
    sa = 4 ** (spec.n_sites - a - 1)
    sb = 4 ** (spec.n_sites - b - 1)
    da = (idx // sa) % 4
    db = (idx // sb) % 4
    return idx + (db - da) * sa + (da - db) * sb


def _permutation_residual(h: np.ndarray, perm: np.ndarray) -> float:
    """Frobenius norm of [H, W] for an involutive permutation unitary
    W e_k = e_{perm[k]}: HW and WH reduce to column/row reindexing."""
    return float(np.linalg.norm(h[:, perm] - h[perm, :]))


def symmetry_commutator_residuals(spec: LatticeSpec, phi1: float = 0.7, phi2: float = 1.9) -> dict[str, float]:
    """Frobenius norms of [H, W] for the three symmetry implementations:
    the product type-exchange unitary, the product particle-hole unitary,
    and the gauge phase exp(i/2 (phi1 Q_1 + phi2 Q_2))."""
    h = build_lattice_hamiltonian(spec)
    # one-site type exchange permutes basis states 1 <-> 2; particle-hole 0 <-> 3, 1 <-> 2
    exchange = _digit_permutation(spec, np.array([0, 2, 1, 3]))
    ph = _digit_permutation(spec, np.array([3, 2, 1, 0]))
    z1 = np.real(np.diag(ops.pauli_site_operator(1, "z")))
    z2 = np.real(np.diag(ops.pauli_site_operator(2, "z")))
    q1 = np.zeros(spec.dim)
    q2 = np.zeros(spec.dim)
    for i in range(spec.n_sites):
        q1 += np.real(np.diag(site_operator(np.diag(z1), i, spec.n_sites)))
        q2 += np.real(np.diag(site_operator(np.diag(z2), i, spec.n_sites)))
    phases = np.exp(0.5j * (phi1 * q1 + phi2 * q2))
    gauge_res = float(np.linalg.norm(h * (phases[None, :] - phases[:, None])))
    return {
        "type_exchange": _permutation_residual(h, exchange),
        "particle_hole": _permutation_residual(h, ph),
        "gauge": gauge_res,
    }


def lattice_observables(spec: LatticeSpec, phi1: float = 0.7, phi2: float = 1.9) -> LatticeObservables:
    """One-shot Gibbs observables sharing a single diagonalization."""
    hop, n0 = _hopping_and_zero_mode(spec)
    h = (spec.params.t / spec.n_sites) * hop
    h[np.diag_indices_from(h)] += spec.params.U * _zz_diagonal(spec)
    evals, vecs, w = _gibbs_eigen(spec, h)

    z1 = np.real(np.diag(ops.pauli_site_operator(1, "z")))
    q1 = np.zeros(spec.dim)
    for i in range(spec.n_sites):
        q1 += np.real(np.diag(site_operator(np.diag(z1), i, spec.n_sites)))
    # diagonal observable: <diag d> = sum_k w_k sum_i d_i v_ik^2
    sz1 = float(((vecs * vecs).T @ q1) @ w) / spec.n_sites

    return LatticeObservables(
        zero_mode_density=_expect(vecs, w, n0) / spec.n_sites,
        sigma_z_per_site=sz1,
        energy_density=float(evals @ w) / spec.n_sites,
        symmetry_residuals=symmetry_commutator_residuals(spec, phi1, phi2),
    )
