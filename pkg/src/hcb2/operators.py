"""One-site (4x4) operator algebra of the two-type hard-core boson model.

Each lattice site carries two hard-core boson species, so the one-site
observable algebra is M2 (x) M2 = M4.  Hard-core creation/annihilation is
realized by Pauli raising/lowering operators; per species the basis is
(occupied, empty), so sigma+ sigma- = diag(1, 0) counts the particle.

The two-species basis is ordered with the type-1 factor as the fast index,

    index 0 : (1, 1)   both species present
    index 1 : (0, 1)   type 1 empty, type 2 present
    index 2 : (1, 0)   type 1 present, type 2 empty
    index 3 : (0, 0)   both empty

so a type-1 operator a embeds as kron(I2, a) and a type-2 operator b as
kron(b, I2).  In this layout the mean-field one-site Hamiltonian

    h_lambda = t lam (s+_1 + s+_2) + t conj(lam) (s-_1 + s-_2) + U sz_1 sz_2

is the explicit matrix built by `build_h_lambda`, with spectrum
(-U, U, eta, -eta) where eta = sqrt(U^2 + 4 |t lam|^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DegenerateSpectrumError, ModelParams

_PAULI = {
    "plus": np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex),
    "minus": np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
}

_I2 = np.eye(2, dtype=complex)

IDENTITY = np.eye(4, dtype=complex)


def pauli_site_operator(particle_type: int, kind: str) -> np.ndarray:
    """4x4 matrix of sigma^kind acting on one species of the two-species site."""
    if particle_type not in (1, 2):
        raise ValueError(f"particle_type must be 1 or 2, got {particle_type}")
    try:
        op = _PAULI[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(_PAULI)}, got {kind!r}") from None
    if particle_type == 1:
        return np.kron(_I2, op)
    return np.kron(op, _I2)


def q_plus() -> np.ndarray:
    """Generator sz_1 + sz_2 of the total (in-phase) gauge rotation."""
    return pauli_site_operator(1, "z") + pauli_site_operator(2, "z")


def q_minus() -> np.ndarray:
    """Generator sz_1 - sz_2 of the relative (out-of-phase) gauge rotation."""
    return pauli_site_operator(1, "z") - pauli_site_operator(2, "z")


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def is_hermitian(a: np.ndarray, tol: float = 1e-14) -> bool:
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def eta_value(params: ModelParams, lam: complex) -> float:
    """Gap eta = sqrt(U^2 + 4 |t lam|^2) of the one-site Hamiltonian."""
    return math.hypot(params.U, 2.0 * abs(params.t * lam))


def build_h_lambda(params: ModelParams, lam: complex) -> np.ndarray:
    """Explicit 4x4 mean-field Hamiltonian at order parameter lambda."""
    U = params.U
    tl = complex(params.t) * complex(lam)
    cl = tl.conjugate()
    return np.array(
        [
            [U, tl, tl, 0.0],
            [cl, -U, 0.0, tl],
            [cl, 0.0, -U, tl],
            [0.0, cl, cl, U],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class OneSiteSpectrum:
    """Spectral data of h_lambda in the fixed order (-U, U, eta, -eta).

    eigenvectors holds |phi_i> as column i; projections[i] is the rank-1
    projector |phi_i><phi_i|.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    projections: np.ndarray

    @property
    def eta(self) -> float:
        return float(self.eigenvalues[2])

    def hamiltonian(self) -> np.ndarray:
        """Reconstruct h_lambda = sum_i eps_i P_i."""
        return np.einsum("i,ijk->jk", self.eigenvalues, self.projections)


def diagonalize_h(params: ModelParams, lam: complex, closed_form: bool | None = None) -> OneSiteSpectrum:
    """Diagonalize h_lambda.

    Away from the degenerate point the closed-form orthonormal eigenvectors
    are used.  When eta == U at working precision (lam = 0, t = 0, or |t lam|
    below the resolution of U) the {U, U} pair is degenerate, the closed form
    for |phi_1> divides by zero, and the basis is taken from the numeric
    solver instead.  Passing closed_form=True there raises
    DegenerateSpectrumError.
    """
    U = params.U
    tl = complex(params.t) * complex(lam)
    eta = math.hypot(U, 2.0 * abs(tl))
    degenerate = eta - U <= 0.0
    if closed_form is None:
        closed_form = not degenerate
    if closed_form and degenerate:
        raise DegenerateSpectrumError(
            "closed-form eigenvectors are undefined at the degenerate point "
            "eta = U (t*lambda = 0 at working precision); use the numeric path"
        )

    eigenvalues = np.array([-U, U, eta, -eta], dtype=float)
    vecs = np.zeros((4, 4), dtype=complex)

    if closed_form:
        s2 = math.sqrt(2.0)
        cl = tl.conjugate()
        vecs[:, 0] = np.array([0.0, 1.0, -1.0, 0.0]) / s2
        vecs[:, 1] = np.array([tl, 0.0, 0.0, -cl]) / (s2 * abs(tl))
        vecs[:, 2] = np.array([tl, (eta - U) / 2.0, (eta - U) / 2.0, cl]) / math.sqrt(eta * (eta - U))
        vecs[:, 3] = np.array([tl, -(eta + U) / 2.0, -(eta + U) / 2.0, cl]) / math.sqrt(eta * (eta + U))
    else:
        # ascending order puts the two (-U)-like vectors first; slots are
        # ordered (-U, U, U, -U)
        _, num_vecs = np.linalg.eigh(build_h_lambda(params, lam))
        for slot, col in zip((0, 3, 1, 2), range(4)):
            vecs[:, slot] = num_vecs[:, col]

    projections = np.stack([np.outer(vecs[:, i], vecs[:, i].conj()) for i in range(4)])
    return OneSiteSpectrum(eigenvalues=eigenvalues, eigenvectors=vecs, projections=projections)


def gibbs_weights(eigenvalues: np.ndarray, beta: float) -> np.ndarray:
    """Boltzmann weights exp(-beta eps_i)/Z, shifted by the minimum eigenvalue
    so that beta up to 1e3 never overflows."""
    if math.isinf(beta):
        raise ValueError("gibbs_weights requires finite beta")
    eps = np.asarray(eigenvalues, dtype=float)
    w = np.exp(-beta * (eps - eps.min()))
    return w / w.sum()


def gibbs_density(params: ModelParams, lam: complex) -> np.ndarray:
    """Gibbs density matrix exp(-beta h_lambda)/Tr exp(-beta h_lambda),
    assembled in the eigenbasis (never by power series)."""
    if params.is_ground_state:
        raise ValueError("gibbs_density requires finite beta")
    spec = diagonalize_h(params, lam)
    w = gibbs_weights(spec.eigenvalues, params.beta)
    return np.einsum("i,ijk->jk", w, spec.projections)


def expectation(rho: np.ndarray, a: np.ndarray) -> complex:
    """Trace pairing Tr(rho a)."""
    if rho.shape != a.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {a.shape}")
    return complex(np.trace(rho @ a))


def type_exchange_unitary() -> np.ndarray:
    """Self-adjoint unitary swapping the two particle types,
    u = n_1 n_2 + (1-n_1)(1-n_2) + s+_1 s-_2 + s-_1 s+_2."""
    sp1 = pauli_site_operator(1, "plus")
    sm1 = pauli_site_operator(1, "minus")
    sp2 = pauli_site_operator(2, "plus")
    sm2 = pauli_site_operator(2, "minus")
    return sp1 @ sm1 @ sp2 @ sm2 + sm1 @ sp1 @ sm2 @ sp2 + sp1 @ sm2 + sm1 @ sp2


def particle_hole_unitary() -> np.ndarray:
    """sx_1 sx_2, exchanging creation and annihilation for both types."""
    return pauli_site_operator(1, "x") @ pauli_site_operator(2, "x")


def gauge_unitary(phi1: float, phi2: float) -> np.ndarray:
    """exp(i/2 (phi1 sz_1 + phi2 sz_2)), the two-parameter gauge rotation."""
    z1 = np.real(np.diag(pauli_site_operator(1, "z")))
    z2 = np.real(np.diag(pauli_site_operator(2, "z")))
    return np.diag(np.exp(0.5j * (phi1 * z1 + phi2 * z2)))


def symmetry_unitary(kind: str, phi1: float = 0.0, phi2: float = 0.0) -> np.ndarray:
    """Dispatch on kind in {'type_exchange', 'particle_hole', 'gauge'}."""
    if kind == "type_exchange":
        return type_exchange_unitary()
    if kind == "particle_hole":
        return particle_hole_unitary()
    if kind == "gauge":
        return gauge_unitary(phi1, phi2)
    raise ValueError(f"unknown symmetry kind {kind!r}")


def heisenberg_evolve(a: np.ndarray, spectrum: OneSiteSpectrum, time: float) -> np.ndarray:
    """exp(i h t) a exp(-i h t), evaluated in the eigenbasis of h."""
    v = spectrum.eigenvectors
    u = (v * np.exp(1j * spectrum.eigenvalues * time)) @ v.conj().T
    return u @ a @ u.conj().T
