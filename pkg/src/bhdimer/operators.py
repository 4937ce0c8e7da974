"""Explicit spin-1 operator matrices and the pair Hamiltonian in the product basis.

The public matrices all use the fixed product-basis ordering PRODUCT_BASIS,
chosen so that the partial transpose of the thermal state is block diagonal:
two 1x1 blocks, two identical 2x2 blocks and one 3x3 block.
"""

from __future__ import annotations

import numpy as np

from .params import ModelParams

#: Product-basis ordering |s1, s2> used by every 9x9 matrix in the package.
PRODUCT_BASIS: tuple[tuple[int, int], ...] = (
    (-1, 1),
    (1, -1),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 0),
    (-1, -1),
    (0, 0),
    (1, 1),
)

#: Index of each |s1, s2> pair inside PRODUCT_BASIS.
PRODUCT_INDEX: dict[tuple[int, int], int] = {
    pair: i for i, pair in enumerate(PRODUCT_BASIS)
}

# Single-spin matrices in the m = (-1, 0, 1) basis.
_SZ1 = np.diag([-1.0, 0.0, 1.0])
_SPLUS1 = np.zeros((3, 3))
_SPLUS1[1, 0] = _SPLUS1[2, 1] = np.sqrt(2.0)
_SMINUS1 = _SPLUS1.T
_ID3 = np.eye(3)

# kron() builds matrices over the lexicographic pair order
# ((-1,-1), (-1,0), ..., (1,1)); this permutation reindexes to PRODUCT_BASIS.
_PERM = np.array([3 * (s1 + 1) + (s2 + 1) for s1, s2 in PRODUCT_BASIS])


def _to_product_order(m: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(m[np.ix_(_PERM, _PERM)])


def _readonly(m: np.ndarray) -> np.ndarray:
    m.flags.writeable = False
    return m


#: Total magnetization J_z = S1_z + S2_z.
JZ: np.ndarray = _readonly(
    _to_product_order(np.kron(_SZ1, _ID3) + np.kron(_ID3, _SZ1))
)

#: Exchange S1.S2 = S1_z S2_z + (S1_+ S2_- + S1_- S2_+)/2, exactly symmetric.
EXCHANGE: np.ndarray = _readonly(
    _to_product_order(
        np.kron(_SZ1, _SZ1)
        + 0.5 * (np.kron(_SPLUS1, _SMINUS1) + np.kron(_SMINUS1, _SPLUS1))
    )
)

#: Squared exchange (S1.S2)^2.
EXCHANGE_SQ: np.ndarray = _readonly(EXCHANGE @ EXCHANGE)

_IDENTITY9 = _readonly(np.eye(9))


def hamiltonian_matrix(p: ModelParams) -> np.ndarray:
    """9x9 pair Hamiltonian omega*Jz + tau*S1.S2 + gamma*(S1.S2)^2 + r*I
    in the PRODUCT_BASIS ordering; real symmetric."""
    return (
        p.omega * JZ
        + p.tau * EXCHANGE
        + p.gamma * EXCHANGE_SQ
        + p.r * _IDENTITY9
    )
