"""Model parameters and shared error types."""

from __future__ import annotations

import math
from dataclasses import dataclass


class InvalidRegimeError(ValueError):
    """An operation requiring the physical regime t < 0 was called outside it."""


class CriticalBetaUndefinedError(ValueError):
    """The critical inverse temperature is only defined for 2U < -t."""


class DegenerateSpectrumError(ValueError):
    """The closed-form eigenbasis was requested at t*lambda = 0, where the
    {U, U} eigenvalue pair is degenerate and the formula breaks down."""


class DegenerateBoundaryError(ValueError):
    """A coupling sits exactly on a boundary (e.g. U = -t) the analysis
    leaves open; refuse to classify silently."""


class DimensionCapError(ValueError):
    """A lattice exceeds the configured dense-diagonalization size cap."""


@dataclass(frozen=True)
class ModelParams:
    """Physical knobs of the two-type hard-core boson model.

    t    : hopping amplitude; condensation requires t < 0
    U    : inter-type coupling, >= 0 (the one-site interaction U sz_1 sz_2)
    beta : inverse temperature, > 0; math.inf selects the ground state

    The chemical potential is not free: it is pinned to half filling, which
    is what reduces the one-site interaction to the sz_1 sz_2 form.
    """

    t: float
    U: float
    beta: float

    def __post_init__(self):
        if math.isnan(self.t):
            raise ValueError("t must not be NaN")
        if not self.U >= 0.0:
            raise ValueError(f"U must be >= 0, got {self.U}")
        if not self.beta > 0.0:
            raise ValueError(f"beta must be > 0 (math.inf for T=0), got {self.beta}")

    @classmethod
    def ground_state(cls, t: float, U: float) -> "ModelParams":
        """Parameters at zero temperature (beta = inf)."""
        return cls(t=t, U=U, beta=math.inf)

    @property
    def is_physical(self) -> bool:
        """True iff the hopping sign admits nontrivial gap-equation solutions."""
        return self.t < 0.0

    @property
    def is_ground_state(self) -> bool:
        return math.isinf(self.beta)
