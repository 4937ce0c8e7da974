"""Shared independent oracles for the test suite.

Everything here is built from scratch (kron products, hand-expanded energy
lists) so that library bugs cannot hide behind shared code paths.
"""

import numpy as np


def reference_hamiltonian(tau: float, gamma: float, omega: float) -> np.ndarray:
    """9x9 pair Hamiltonian over the lexicographic product basis.

    Assembled directly from kron products of single-spin matrices; the basis
    ordering differs from the library's, which is fine for spectra.
    """
    sz = np.diag([-1.0, 0.0, 1.0])
    sp = np.zeros((3, 3))
    sp[1, 0] = sp[2, 1] = np.sqrt(2.0)
    sm = sp.T
    eye = np.eye(3)
    exchange = np.kron(sz, sz) + 0.5 * (np.kron(sp, sm) + np.kron(sm, sp))
    jz = np.kron(sz, eye) + np.kron(eye, sz)
    return (
        omega * jz
        + tau * exchange
        + gamma * (exchange @ exchange)
        + (tau - gamma) * np.eye(9)
    )


def reference_energies(tau: float, gamma: float, omega: float) -> np.ndarray:
    """Hand-expanded level energies, ordered (0,0), (1,-1..1), (2,-2..2)."""
    return np.array(
        [
            3.0 * gamma - tau,
            -omega,
            0.0,
            omega,
            2.0 * tau - 2.0 * omega,
            2.0 * tau - omega,
            2.0 * tau,
            2.0 * tau + omega,
            2.0 * tau + 2.0 * omega,
        ]
    )


def random_points(rng: np.random.Generator, n: int):
    """(tau, gamma, omega, T) tuples over the standard randomized domain."""
    for _ in range(n):
        tau, gamma, omega = rng.uniform(-20.0, 20.0, 3)
        yield float(tau), float(gamma), float(omega), float(rng.uniform(0.05, 5.0))
