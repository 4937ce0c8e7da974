"""Microscopic lattice amplitudes and their map to the dimensionless model.

Second-order tunneling between two singly occupied neighboring sites turns
the lattice amplitudes (t, u0, u2) into an effective spin-spin interaction
with coupling constants k0, k1, k2.  In units of t the model is controlled
by the dimensionless triple (tau, gamma, omega) plus a temperature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonpositiveTemperatureError, ScatteringSingularityError

# Absolute guard for the scattering denominators; u-values carry no natural
# scale, so a relative threshold would be arbitrary.
_SINGULARITY_FLOOR = 1e-300


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class MicroscopicParams:
    """Lattice amplitudes: tunneling t (> 0, sets the energy unit), contact
    scattering u0 and spin-dependent scattering u2."""

    t: float
    u0: float
    u2: float

    def __post_init__(self) -> None:
        for name in ("t", "u0", "u2"):
            _require_finite(name, getattr(self, name))
        if self.t <= 0:
            raise DomainError(f"tunneling amplitude t must be > 0, got {self.t}")
        if abs(self.u0 + self.u2) <= _SINGULARITY_FLOOR:
            raise ScatteringSingularityError(
                "scattering-resonance singularity: u0 + u2 = 0"
            )
        if abs(self.u0 - 2.0 * self.u2) <= _SINGULARITY_FLOOR:
            raise ScatteringSingularityError(
                "scattering-resonance singularity: u0 - 2*u2 = 0"
            )


@dataclass(frozen=True)
class EffectiveCouplings:
    """Effective exchange constants; k0 = k1 - k2 holds by construction."""

    k0: float
    k1: float
    k2: float

    def __post_init__(self) -> None:
        scale = max(abs(self.k0), abs(self.k1), abs(self.k2))
        if scale == 0.0 or abs(self.k0 - (self.k1 - self.k2)) > 1e-12 * scale:
            raise ValueError(
                f"inconsistent couplings: k0={self.k0!r} != k1 - k2 = {self.k1 - self.k2!r}"
            )


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless model point: linear exchange tau, quadratic exchange
    gamma, magnetic field omega and temperature (k_B = 1, energies in units
    of t).

    temperature = 0 is accepted for purely spectral work; every thermal
    operation demands temperature > 0 and raises otherwise.
    """

    tau: float
    gamma: float
    omega: float
    temperature: float = 0.0

    def __post_init__(self) -> None:
        for name in ("tau", "gamma", "omega", "temperature"):
            _require_finite(name, getattr(self, name))
        if self.temperature < 0:
            raise DomainError(f"temperature must be >= 0, got {self.temperature}")

    @property
    def r(self) -> float:
        """Coefficient of the identity shift, always recomputed as tau - gamma."""
        return self.tau - self.gamma

    @property
    def beta(self) -> float:
        """Inverse temperature 1/T."""
        if self.temperature <= 0:
            raise NonpositiveTemperatureError(
                f"thermal quantities require temperature > 0, got {self.temperature}"
            )
        return 1.0 / self.temperature


def map_couplings(m: MicroscopicParams) -> EffectiveCouplings:
    """Map lattice amplitudes to the effective exchange constants.

    k1 = 2t^2/(u0+u2),
    k2 = 2t^2/(3(u0+u2)) + 4t^2/(3(u0-2u2)),
    k0 = 4t^2/(3(u0+u2)) - 4t^2/(3(u0-2u2)) = k1 - k2.
    """
    t2 = m.t * m.t
    d_sum = m.u0 + m.u2
    d_diff = m.u0 - 2.0 * m.u2
    k1 = 2.0 * t2 / d_sum
    k2 = 2.0 * t2 / (3.0 * d_sum) + 4.0 * t2 / (3.0 * d_diff)
    k0 = 4.0 * t2 / (3.0 * d_sum) - 4.0 * t2 / (3.0 * d_diff)
    return EffectiveCouplings(k0=k0, k1=k1, k2=k2)


def to_model_params(
    m: MicroscopicParams,
    temperature: float,
    omega: float = 0.0,
) -> ModelParams:
    """Build the dimensionless model point for given lattice amplitudes.

    tau = k1/t and gamma = k2/t; the field omega is external to the lattice
    model and is supplied by the caller (default 0).
    """
    c = map_couplings(m)
    return ModelParams(
        tau=c.k1 / m.t,
        gamma=c.k2 / m.t,
        omega=omega,
        temperature=temperature,
    )
