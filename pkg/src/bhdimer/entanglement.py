"""Thermal state, partial transpose and negativity of the spin-1 pair.

Two independent routes build the partially transposed thermal state:

* ``partial_transpose_closed_form`` fills the fixed block structure with the
  ten named entries (L, M, P, R, Q with +/- variants), each an explicit
  combination of level occupation probabilities;
* ``partial_transpose_numeric`` expands the thermal state over the product
  basis with Clebsch-Gordan coefficients and swaps the first-spin indices.

They must agree to machine precision; the test suite leans on that rather
than trusting either transcription axiomatically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

import numpy as np

from .linalg import sym_eigenvalues
from .operators import PRODUCT_BASIS, PRODUCT_INDEX
from .params import ModelParams
from .spectrum import COUPLED_LABELS, CoupledLabel
from .thermo import level_probabilities

__all__ = [
    "PRODUCT_BASIS",
    "PartialTransposeMatrix",
    "NegativityResult",
    "clebsch_gordan",
    "clebsch_gordan_1x1",
    "thermal_density_matrix",
    "partial_transpose",
    "partial_transpose_closed_form",
    "partial_transpose_numeric",
    "negativity",
    "classify_negativity",
]

_LABEL_INDEX = {lab: i for i, lab in enumerate(COUPLED_LABELS)}


def clebsch_gordan(j1: int, m1: int, j2: int, m2: int, j: int, m: int) -> float:
    """<j1 m1; j2 m2 | j m> for integer quantum numbers, Condon-Shortley phases.

    Racah's closed form; exact zeros for violated selection rules.
    """
    if m1 + m2 != m or abs(m1) > j1 or abs(m2) > j2 or abs(m) > j:
        return 0.0
    if j < abs(j1 - j2) or j > j1 + j2:
        return 0.0
    f = math.factorial
    pref = (
        (2 * j + 1)
        * f(j1 + j2 - j) * f(j1 - j2 + j) * f(-j1 + j2 + j) / f(j1 + j2 + j + 1)
        * f(j + m) * f(j - m)
        * f(j1 - m1) * f(j1 + m1) * f(j2 - m2) * f(j2 + m2)
    )
    k_lo = max(0, j2 - j - m1, j1 + m2 - j)
    k_hi = min(j1 + j2 - j, j1 - m1, j2 + m2)
    total = 0.0
    for k in range(k_lo, k_hi + 1):
        denom = (
            f(k) * f(j1 + j2 - j - k) * f(j1 - m1 - k) * f(j2 + m2 - k)
            * f(j - j2 + m1 + k) * f(j - j1 - m2 + k)
        )
        total += (-1) ** k / denom
    return math.sqrt(pref) * total


@cache
def clebsch_gordan_1x1() -> np.ndarray:
    """Orthogonal 9x9 change of basis for two spin-1 particles.

    Column c is the coupled state COUPLED_LABELS[c] expanded over
    PRODUCT_BASIS rows.  The array is cached and read-only; copy before
    mutating.
    """
    m = np.zeros((9, 9))
    for col, lab in enumerate(COUPLED_LABELS):
        for row, (s1, s2) in enumerate(PRODUCT_BASIS):
            m[row, col] = clebsch_gordan(1, s1, 1, s2, lab.j, lab.m)
    m.flags.writeable = False
    return m


def thermal_density_matrix(p: ModelParams) -> np.ndarray:
    """Gibbs state exp(-beta H)/Z as a 9x9 matrix over PRODUCT_BASIS.

    Assembled from the level probabilities and the coupled eigenbasis, so it
    stays finite and normalized at any temperature > 0.
    """
    probs = level_probabilities(p)
    c = clebsch_gordan_1x1()
    return (c * probs) @ c.T


# sigma[(a1,a2),(b1,b2)] = rho[(b1,a2),(a1,b2)]: precomputed source indices.
_PT_ROWS = np.empty((9, 9), dtype=np.intp)
_PT_COLS = np.empty((9, 9), dtype=np.intp)
for _i, (_a1, _a2) in enumerate(PRODUCT_BASIS):
    for _j, (_b1, _b2) in enumerate(PRODUCT_BASIS):
        _PT_ROWS[_i, _j] = PRODUCT_INDEX[(_b1, _a2)]
        _PT_COLS[_i, _j] = PRODUCT_INDEX[(_a1, _b2)]


def partial_transpose(rho: np.ndarray) -> np.ndarray:
    """Transpose the first-spin indices of any 9x9 operator over PRODUCT_BASIS."""
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (9, 9):
        raise ValueError(f"expected a 9x9 matrix, got shape {rho.shape}")
    return rho[_PT_ROWS, _PT_COLS]


@dataclass(frozen=True, eq=False)
class PartialTransposeMatrix:
    """Partially transposed thermal state over PRODUCT_BASIS.

    Block diagonal: the (-1,1) and (1,-1) singletons, two identical 2x2
    blocks [[P-, Q-], [Q-, P+]] and the 3x3 block over
    {(-1,-1), (0,0), (1,1)}.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (9, 9):
            raise ValueError(f"expected a 9x9 matrix, got shape {m.shape}")
        if abs(float(np.trace(m)) - 1.0) > 1e-12:
            raise ValueError("partial transpose must preserve unit trace")
        if float(np.max(np.abs(m - m.T))) > 1e-12:
            raise ValueError("partial transpose must be symmetric in this basis")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def r_plus(self) -> float:
        return float(self.matrix[0, 0])

    @property
    def p_minus(self) -> float:
        return float(self.matrix[2, 2])

    @property
    def p_plus(self) -> float:
        return float(self.matrix[3, 3])

    @property
    def q_minus(self) -> float:
        return float(self.matrix[2, 3])

    @property
    def l_minus(self) -> float:
        return float(self.matrix[6, 6])

    @property
    def l_plus(self) -> float:
        return float(self.matrix[8, 8])

    @property
    def m_minus(self) -> float:
        return float(self.matrix[6, 7])

    @property
    def m_plus(self) -> float:
        return float(self.matrix[7, 8])

    @property
    def r_minus(self) -> float:
        return float(self.matrix[6, 8])

    @property
    def q_plus(self) -> float:
        return float(self.matrix[7, 7])

    @property
    def block_3x3(self) -> np.ndarray:
        """The [[L-, M-, R-], [M-, Q+, M+], [R-, M+, L+]] block."""
        return self.matrix[6:9, 6:9].copy()


def _prob(probs: np.ndarray, j: int, m: int) -> float:
    return float(probs[_LABEL_INDEX[CoupledLabel(j, m)]])


def partial_transpose_closed_form(p: ModelParams) -> PartialTransposeMatrix:
    """Partially transposed thermal state from the ten closed-form entries.

    With q(j, m) = exp(-beta E(j, m)) / Z the entries read

        L+- = q(2, +-2)
        M+- = -(q(1, +-1) - q(2, +-1)) / 2
        P+- =  (q(1, +-1) + q(2, +-1)) / 2
        R+- = (q(2, 0) +- 3 q(1, 0) + 2 q(0, 0)) / 6
        Q+  = (2 q(2, 0) + q(0, 0)) / 3
        Q-  = (q(2, 0) - q(0, 0)) / 3

    which are the hyperbolic-function entry formulas rewritten over
    ground-shifted Boltzmann weights so they stay finite at any
    temperature > 0.
    """
    probs = level_probabilities(p)
    l_plus = _prob(probs, 2, 2)
    l_minus = _prob(probs, 2, -2)
    m_plus = -0.5 * (_prob(probs, 1, 1) - _prob(probs, 2, 1))
    m_minus = -0.5 * (_prob(probs, 1, -1) - _prob(probs, 2, -1))
    p_plus = 0.5 * (_prob(probs, 1, 1) + _prob(probs, 2, 1))
    p_minus = 0.5 * (_prob(probs, 1, -1) + _prob(probs, 2, -1))
    r_plus = (_prob(probs, 2, 0) + 3.0 * _prob(probs, 1, 0) + 2.0 * _prob(probs, 0, 0)) / 6.0
    r_minus = (_prob(probs, 2, 0) - 3.0 * _prob(probs, 1, 0) + 2.0 * _prob(probs, 0, 0)) / 6.0
    q_plus = (2.0 * _prob(probs, 2, 0) + _prob(probs, 0, 0)) / 3.0
    q_minus = (_prob(probs, 2, 0) - _prob(probs, 0, 0)) / 3.0

    m = np.zeros((9, 9))
    m[0, 0] = m[1, 1] = r_plus
    for base in (2, 4):
        m[base, base] = p_minus
        m[base + 1, base + 1] = p_plus
        m[base, base + 1] = m[base + 1, base] = q_minus
    m[6, 6] = l_minus
    m[7, 7] = q_plus
    m[8, 8] = l_plus
    m[6, 7] = m[7, 6] = m_minus
    m[7, 8] = m[8, 7] = m_plus
    m[6, 8] = m[8, 6] = r_minus
    return PartialTransposeMatrix(matrix=m)


def partial_transpose_numeric(p: ModelParams) -> PartialTransposeMatrix:
    """Oracle route: build the thermal state explicitly and swap indices."""
    return PartialTransposeMatrix(matrix=partial_transpose(thermal_density_matrix(p)))


@dataclass(frozen=True, eq=False)
class NegativityResult:
    """Eigenvalues of the partial transpose (ascending) and the negativity."""

    eigenvalues: np.ndarray
    negativity: float


def negativity(p: ModelParams) -> NegativityResult:
    """Negativity N = (sum |lambda_i| - 1) / 2 of the thermal state.

    Six eigenvalues are closed-form: R+ twice, and twice each root of the
    repeated 2x2 block, (P+ + P- -+ sqrt((P+ - P-)^2 + 4 Q-^2)) / 2.  The
    remaining three come from the symmetric 3x3 block via the Jacobi
    eigensolver.  Round-off can leave N at -1e-17 for separable states, so
    the result is floored at exactly 0.
    """
    sigma = partial_transpose_closed_form(p)
    disc = math.hypot(sigma.p_plus - sigma.p_minus, 2.0 * sigma.q_minus)
    pair_lo = 0.5 * (sigma.p_plus + sigma.p_minus - disc)
    pair_hi = 0.5 * (sigma.p_plus + sigma.p_minus + disc)
    block = sym_eigenvalues(sigma.block_3x3)
    eigenvalues = np.sort(
        np.concatenate(
            (
                [sigma.r_plus, sigma.r_plus, pair_lo, pair_lo, pair_hi, pair_hi],
                block,
            )
        )
    )
    value = 0.5 * (float(np.abs(eigenvalues).sum()) - 1.0)
    return NegativityResult(eigenvalues=eigenvalues, negativity=max(value, 0.0))


#: |N - v| threshold assigning the plateau labels N0, N_HALF, N1.
PHASE_TOLERANCE = 0.01

_PHASES = (("N0", 0.0), ("N_HALF", 0.5), ("N1", 1.0))


def classify_negativity(value: float, *, tol: float = PHASE_TOLERANCE) -> str:
    """Assign a plateau label to a negativity value.

    Values within tol of 0, 1/2 or 1 map to N0, N_HALF, N1; anything else is
    CROSSOVER.  The plateaus are sharp only at low temperature (T <~ 0.05);
    at higher T the labels merely locate the nearest plateau.
    """
    for name, center in _PHASES:
        if abs(value - center) <= tol:
            return name
    return "CROSSOVER"
