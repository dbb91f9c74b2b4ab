"""Closed-form eigenstructure of the triplet sector and pure-state concurrence."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDrive, NotNormalized, OutOfRange
from .linalg import hermitian_eig
from . import tolerances as tol

_SQ2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DressedState:
    """Triplet-sector eigenstate: amplitudes on (|+1>, |0>, |-1>) and energy."""

    amplitudes: np.ndarray
    eigenvalue: float

    def __post_init__(self):
        n = np.linalg.norm(self.amplitudes)
        if abs(n - 1.0) > 1e-12:
            raise NotNormalized(f"dressed state norm {n!r}")


def triplet_block(delta: float, omega: float, drive: float) -> np.ndarray:
    """3x3 Hamiltonian block on (|+1>, |0>, |-1>)."""
    e = _SQ2 * drive
    return np.array(
        [[delta, e, 0.0], [e, omega, e], [0.0, e, -delta]], dtype=complex
    )


def triplet_cubic_roots(delta: float, omega: float, drive: float) -> np.ndarray:
    """Real roots of eps^3 - W eps^2 - (D^2 + 4E^2) eps + D^2 W, descending.

    Solved by the trigonometric method (all roots are real because the
    block is Hermitian); falls back to the eigensolver when the
    discriminant is within 1e-12 of zero.
    """
    c2 = -omega
    c1 = -(delta**2 + 4.0 * drive**2)
    c0 = delta**2 * omega
    p = c1 - c2**2 / 3.0
    q = 2.0 * c2**3 / 27.0 - c2 * c1 / 3.0 + c0
    disc = -4.0 * p**3 - 27.0 * q**2
    if disc < 1e-12:
        w, _ = hermitian_eig(triplet_block(delta, omega, drive))
        return w
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * m)
    theta = math.acos(min(1.0, max(-1.0, arg)))
    shift = omega / 3.0
    roots = [m * math.cos((theta - 2.0 * math.pi * k) / 3.0) + shift for k in range(3)]
    return np.array(sorted(roots, reverse=True))


def _dressed_vector(eps: float, drive: float) -> np.ndarray:
    norm2 = 4.0 * drive**2 + eps**2
    if norm2 == 0.0:
        # drive -> 0 limit of the branch whose eigenvalue vanishes
        return np.array([1.0, 0.0, 1.0], dtype=complex) / _SQ2
    return np.array([_SQ2 * drive, eps, _SQ2 * drive], dtype=complex) / math.sqrt(norm2)


def dressed_eigensystem(
    omega: float, drive: float
) -> tuple[DressedState, DressedState, DressedState]:
    """Zero-detuning eigenstates (psi_+, psi_0, psi_-) of the triplet block.

    psi_pm has amplitudes (sqrt(2)E, eps_pm, sqrt(2)E) up to normalization
    with eps_pm = W/2 +- sqrt(W^2 + 16 E^2)/2; psi_0 = (|+1> - |-1>)/sqrt(2)
    with eigenvalue 0 and the |+1> amplitude kept positive.
    """
    if drive < 0:
        raise OutOfRange("drive must be >= 0")
    if drive == 0.0 and omega == 0.0:
        raise DegenerateDrive("all triplet eigenvalues coincide at 0")
    half_gap = math.sqrt(omega**2 + 16.0 * drive**2) / 2.0
    eps_p = omega / 2.0 + half_gap
    eps_m = omega / 2.0 - half_gap
    psi0 = np.array([1.0, 0.0, -1.0], dtype=complex) / _SQ2
    return (
        DressedState(_dressed_vector(eps_p, drive), eps_p),
        DressedState(psi0, 0.0),
        DressedState(_dressed_vector(eps_m, drive), eps_m),
    )


def pure_concurrence(state: np.ndarray) -> float:
    """Concurrence of a pure two-qubit state, computational basis.

    C = 2 |c_ee c_gg - c_eg c_ge|; invariant under local phases.
    """
    psi = np.asarray(state, dtype=complex).ravel()
    if psi.shape != (4,):
        raise ValueError("expected a 4-component state vector")
    n = np.linalg.norm(psi)
    if abs(n - 1.0) > tol.STATE_NORM_ATOL:
        raise NotNormalized(f"state norm {n!r}")
    return float(2.0 * abs(psi[0] * psi[3] - psi[1] * psi[2]))
