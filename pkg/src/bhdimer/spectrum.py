"""Nine-level spectrum of the coupled two-spin-1 pair and its level crossings.

The pair Hamiltonian is diagonal in the total-spin basis |j, m> with
j in {0, 1, 2}, so every energy is available in closed form:

    E(j, m) = omega*m + (tau/2)*(j(j+1) - 2) + (gamma/4)*((j(j+1) - 4)^2 - 4)

Ground-state level crossings in tau are located by a grid pre-scan of the
analytic label-wise energies followed by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoCrossingInRangeError
from .params import ModelParams


@dataclass(frozen=True, order=True)
class CoupledLabel:
    """Total-spin quantum numbers (j, m) of a coupled two-spin-1 state."""

    j: int
    m: int

    def __post_init__(self) -> None:
        if self.j not in (0, 1, 2):
            raise ValueError(f"j must be 0, 1 or 2, got {self.j}")
        if abs(self.m) > self.j:
            raise ValueError(f"|m| must not exceed j, got (j={self.j}, m={self.m})")

    def __str__(self) -> str:
        return f"j{self.j}m{self.m}"


#: All nine coupled labels in ascending (j, m) order.  This order doubles as
#: the deterministic tie-break for degenerate energies.
COUPLED_LABELS: tuple[CoupledLabel, ...] = tuple(
    CoupledLabel(j, m) for j in range(3) for m in range(-j, j + 1)
)

# Per-label coefficients of E = omega*m + tau*_TAU_COEF + gamma*_GAMMA_COEF.
_M_COEF = np.array([lab.m for lab in COUPLED_LABELS], dtype=float)
_TAU_COEF = np.array(
    [0.5 * (lab.j * (lab.j + 1) - 2) for lab in COUPLED_LABELS], dtype=float
)
_GAMMA_COEF = np.array(
    [0.25 * ((lab.j * (lab.j + 1) - 4) ** 2 - 4) for lab in COUPLED_LABELS],
    dtype=float,
)


def eigenvalue(p: ModelParams, label: CoupledLabel) -> float:
    """Energy of the level |j, m> at the given model point."""
    x = label.j * (label.j + 1)
    return p.omega * label.m + 0.5 * p.tau * (x - 2) + 0.25 * p.gamma * ((x - 4) ** 2 - 4)


def level_energies(p: ModelParams) -> np.ndarray:
    """All nine energies, aligned with COUPLED_LABELS."""
    return p.omega * _M_COEF + p.tau * _TAU_COEF + p.gamma * _GAMMA_COEF


@dataclass(frozen=True)
class Spectrum:
    """The nine (label, energy) pairs sorted by energy, ties broken by (j, m)."""

    levels: tuple[tuple[CoupledLabel, float], ...]

    @property
    def ground_label(self) -> CoupledLabel:
        return self.levels[0][0]

    @property
    def ground_energy(self) -> float:
        return self.levels[0][1]

    def energy_of(self, label: CoupledLabel) -> float:
        for lab, e in self.levels:
            if lab == label:
                return e
        raise KeyError(label)


def full_spectrum(p: ModelParams) -> Spectrum:
    """All nine levels sorted ascending; the ground state is levels[0]."""
    energies = level_energies(p)
    pairs = sorted(
        ((lab, float(e)) for lab, e in zip(COUPLED_LABELS, energies)),
        key=lambda item: (item[1], item[0]),
    )
    return Spectrum(levels=tuple(pairs))


def ground_state_energy(p: ModelParams) -> float:
    """Minimum of the nine level energies."""
    return float(level_energies(p).min())


def ground_state_label(p: ModelParams) -> CoupledLabel:
    """Label of the lowest level; degeneracies resolve to the lowest (j, m)."""
    return COUPLED_LABELS[int(np.argmin(level_energies(p)))]


@dataclass(frozen=True)
class Crossing:
    """One ground-state level crossing in tau."""

    tau: float
    energy: float
    label_below: CoupledLabel
    label_above: CoupledLabel
    bracket: tuple[float, float]
    residual_gap: float


@dataclass(frozen=True)
class CrossingReport:
    """Ground-state crossings found inside a tau interval at fixed (gamma, omega)."""

    gamma: float
    omega: float
    tau_range: tuple[float, float]
    crossings: tuple[Crossing, ...]
    label_sequence: tuple[CoupledLabel, ...]
    gap_tolerance: float

    @property
    def tau_a(self) -> float | None:
        """First crossing, if present."""
        return self.crossings[0].tau if self.crossings else None

    @property
    def tau_b(self) -> float | None:
        """Second crossing, if present."""
        return self.crossings[1].tau if len(self.crossings) > 1 else None


def _label_energy(label_idx: int, tau: float, gamma: float, omega: float) -> float:
    return (
        omega * _M_COEF[label_idx]
        + tau * _TAU_COEF[label_idx]
        + gamma * _GAMMA_COEF[label_idx]
    )


def find_crossings(
    gamma: float,
    omega: float,
    tau_range: tuple[float, float],
    *,
    grid_intervals: int = 10_000,
    tau_tol: float = 1e-9,
    gap_tolerance: float = 1e-6,
) -> CrossingReport:
    """Locate ground-state level crossings in tau.

    The ground label is tracked on a uniform grid of the analytic label-wise
    energies (never on numerically sorted eigenvalues, which are ambiguous at
    the degeneracy itself); each label change is then refined by bisection on
    the energy difference of the two labels involved.  Energies are linear in
    tau, so bisection is exact up to tau_tol.

    Raises NoCrossingInRangeError when the ground label never changes, which
    covers both a genuinely constant ground state and a degenerate ground
    multiplet with no isolated crossing.
    """
    lo, hi = float(tau_range[0]), float(tau_range[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise ValueError(f"tau_range must be a finite interval with lo < hi, got {tau_range!r}")
    if grid_intervals < 1:
        raise ValueError("grid_intervals must be >= 1")

    taus = np.linspace(lo, hi, grid_intervals + 1)
    energies = (
        omega * _M_COEF[:, None]
        + taus[None, :] * _TAU_COEF[:, None]
        + gamma * _GAMMA_COEF[:, None]
    )
    ground_idx = np.argmin(energies, axis=0)

    label_sequence: list[CoupledLabel] = [COUPLED_LABELS[ground_idx[0]]]
    for idx in ground_idx[1:]:
        if COUPLED_LABELS[idx] != label_sequence[-1]:
            label_sequence.append(COUPLED_LABELS[idx])

    crossings: list[Crossing] = []
    for k in np.flatnonzero(ground_idx[:-1] != ground_idx[1:]):
        ia, ib = int(ground_idx[k]), int(ground_idx[k + 1])

        def gap(tau: float) -> float:
            return _label_energy(ia, tau, gamma, omega) - _label_energy(ib, tau, gamma, omega)

        a, b = float(taus[k]), float(taus[k + 1])
        ga, gb = gap(a), gap(b)
        if ga == 0.0 and gb == 0.0:
            # Identical energy functions over the interval; the argmin
            # tie-break should prevent this, keep it as a guard.
            continue
        if ga == 0.0:
            root, bracket = a, (a, a)
        elif gb == 0.0:
            root, bracket = b, (b, b)
        else:
            while b - a > tau_tol:
                mid = 0.5 * (a + b)
                gm = gap(mid)
                if gm == 0.0:
                    a = b = mid
                    break
                if (gm < 0.0) == (ga < 0.0):
                    a, ga = mid, gm
                else:
                    b = mid
            root, bracket = 0.5 * (a + b), (a, b)

        at_root = ModelParams(tau=root, gamma=gamma, omega=omega)
        sorted_energies = np.sort(level_energies(at_root))
        residual = float(sorted_energies[1] - sorted_energies[0])
        if residual > gap_tolerance:
            raise RuntimeError(
                f"crossing refinement failed at tau={root}: spectral gap {residual:.3e} "
                f"exceeds gap_tolerance {gap_tolerance:.3e}"
            )
        crossings.append(
            Crossing(
                tau=root,
                energy=ground_state_energy(at_root),
                label_below=COUPLED_LABELS[ia],
                label_above=COUPLED_LABELS[ib],
                bracket=bracket,
                residual_gap=residual,
            )
        )

    if not crossings:
        raise NoCrossingInRangeError(
            f"no isolated ground-state crossing for tau in [{lo}, {hi}] "
            f"at gamma={gamma}, omega={omega}"
        )

    return CrossingReport(
        gamma=gamma,
        omega=omega,
        tau_range=(lo, hi),
        crossings=tuple(crossings),
        label_sequence=tuple(label_sequence),
        gap_tolerance=gap_tolerance,
    )
