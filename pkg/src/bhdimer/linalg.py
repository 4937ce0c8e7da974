"""Dense symmetric-matrix numerics sized for this package's 9x9 problems.

Eigenvalues come from cyclic Jacobi rotations: unconditionally convergent
for symmetric input, deterministic, and dependency free.  The matrix
exponential rides on the eigendecomposition.  None of this is meant to
compete with LAPACK at large n.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

_SYMMETRY_TOL = 1e-13
_OFFDIAG_STOP = 1e-14  # relative to the Frobenius norm of the input
_MAX_SWEEPS = 100


def _as_symmetric(matrix, tol: float) -> np.ndarray:
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > tol:
        raise ValueError(
            f"matrix is not symmetric: max |A - A^T| = {asym:.3e} exceeds {tol:.0e}"
        )
    return a


def _jacobi(a: np.ndarray, want_vectors: bool) -> tuple[np.ndarray, np.ndarray | None]:
    n = a.shape[0]
    v = np.eye(n) if want_vectors else None
    fro = float(np.linalg.norm(a))
    if n < 2 or fro == 0.0:
        return np.diagonal(a).copy(), v
    stop = _OFFDIAG_STOP * fro

    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        # Norm of the off-diagonal entries alone; subtracting squared sums
        # instead would cancel catastrophically near convergence.
        off = float(np.linalg.norm(a[off_mask]))
        if off <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                diff = a[q, q] - a[p, p]
                if abs(apq) <= 1e-20 * abs(diff):
                    # Rotation angle below double resolution; dropping the
                    # entry perturbs eigenvalues by well under the stop norm.
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = diff / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0

                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError(f"Jacobi did not converge within {_MAX_SWEEPS} sweeps")

    return np.diagonal(a).copy(), v


def sym_eigenvalues(matrix, *, symmetry_tol: float = _SYMMETRY_TOL) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, ascending."""
    a = _as_symmetric(matrix, symmetry_tol)
    w, _ = _jacobi(a, want_vectors=False)
    return np.sort(w)


def sym_eigh(matrix, *, symmetry_tol: float = _SYMMETRY_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching orthonormal eigenvector columns."""
    a = _as_symmetric(matrix, symmetry_tol)
    w, v = _jacobi(a, want_vectors=True)
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def sym_expm(matrix, scale: float = 1.0, *, symmetry_tol: float = _SYMMETRY_TOL) -> np.ndarray:
    """exp(scale * M) for symmetric M via eigendecomposition; output symmetric."""
    w, v = sym_eigh(matrix, symmetry_tol=symmetry_tol)
    result = (v * np.exp(scale * w)) @ v.T
    return 0.5 * (result + result.T)


def central_diff(f: Callable[[float], float], x: float, h: float) -> float:
    """Symmetric two-point derivative estimate (f(x+h) - f(x-h)) / (2h)."""
    if not h > 0:
        raise ValueError(f"step h must be > 0, got {h}")
    return (f(x + h) - f(x - h)) / (2.0 * h)
