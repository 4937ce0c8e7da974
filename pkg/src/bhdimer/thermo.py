"""Partition function, internal energy and heat capacity of the thermal pair.

The partition function has a compact closed form built from hyperbolic
functions of beta*tau and beta*omega.  The ensemble averages are evaluated
from Boltzmann weights shifted by the ground energy, exp(-beta*(E - E0)),
which stay finite for beta up to ~1e6; the raw closed form is kept as the
fast, literal reference path and is accurate wherever |beta*E| stays within
double range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ModelParams
from .spectrum import level_energies


def partition_function(p: ModelParams):
    """Closed-form partition function

        Z = exp(-b*tau) * ( 2*cosh(b*tau)*(1 + 2*cosh(b*omega))
                            + 2*exp(-b*tau)*cosh(2*b*omega)
                            + exp(-b*(3*gamma - 2*tau)) ),  b = 1/T.

    Evaluated literally, so it inherits the dtype of the inputs; with float64
    parameters it overflows to inf once |b*E| exceeds roughly 700.
    """
    b = p.beta
    bt = b * p.tau
    bw = b * p.omega
    bracket = (
        2.0 * np.cosh(bt) * (1.0 + 2.0 * np.cosh(bw))
        + 2.0 * np.exp(-bt) * np.cosh(2.0 * bw)
        + np.exp(-b * (3.0 * p.gamma - 2.0 * p.tau))
    )
    return np.exp(-bt) * bracket


def level_probabilities(p: ModelParams) -> np.ndarray:
    """Boltzmann occupation of each level, aligned with COUPLED_LABELS.

    Weights are computed relative to the ground energy, so the result is
    finite and normalized for any temperature > 0.
    """
    e = level_energies(p)
    w = np.exp(-p.beta * (e - e.min()))
    return w / w.sum()


def mean_excitation_energy(p: ModelParams) -> float:
    """Thermal average of E - E0, the excitation above the ground level.

    Free of the additive ground-energy offset, which makes it the right
    quantity to difference numerically when cross-checking heat_capacity.
    """
    e = level_energies(p)
    x = e - e.min()
    w = np.exp(-p.beta * x)
    return float(np.dot(w, x) / w.sum())


def internal_energy(p: ModelParams) -> float:
    """Ensemble mean energy <E> = sum E exp(-beta E) / Z."""
    e = level_energies(p)
    return float(e.min()) + mean_excitation_energy(p)


def heat_capacity(p: ModelParams) -> float:
    """Heat capacity C_V = dU/dT = beta^2 * (<E^2> - <E>^2), never negative."""
    e = level_energies(p)
    x = e - e.min()
    w = np.exp(-p.beta * x)
    probs = w / w.sum()
    mean = np.dot(probs, x)
    var = np.dot(probs, np.square(x - mean))
    return float(p.beta * p.beta * var)


@dataclass(frozen=True)
class ThermoPoint:
    """Partition function, internal energy and heat capacity at one point."""

    params: ModelParams
    z: float
    u: float
    c_v: float


def thermo_point(p: ModelParams) -> ThermoPoint:
    """Evaluate all three thermal quantities at once."""
    return ThermoPoint(
        params=p,
        z=float(partition_function(p)),
        u=internal_energy(p),
        c_v=heat_capacity(p),
    )
