"""Dense complex linear algebra kernels for problems up to 16x16.

Everything here is a pure function of its arguments; inputs are never
mutated. All numerics are double precision.
"""

from __future__ import annotations

import enum

import numpy as np

from . import tolerances as tol
from .errors import NoNullSpace, NotHermitian, NotPSD


class BasisTag(enum.Enum):
    """Basis label carried by states and operators.

    Mixing two differently tagged objects in one expression is an error;
    convert explicitly first.
    """

    COMPUTATIONAL = "computational"  # |ee>, |eg>, |ge>, |gg>
    COUPLED = "coupled"              # |+1>, |0>, |-1>, |A>
    TRIPLET = "triplet"              # |+1>, |0>, |-1>


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; dimensions multiply."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hermitian_part(m: np.ndarray) -> np.ndarray:
    """(m + m^dagger) / 2."""
    return (m + m.conj().T) / 2.0


def _require_hermitian(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    dev = np.abs(m - m.conj().T).max()
    if dev > tol.HERMITICITY_ATOL:
        raise NotHermitian(f"deviation from Hermiticity {dev:.3e}")
    return m


def hermitian_eig(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with eigenvalues real and sorted
    descending; eigenvector i is the column ``v[:, i]``.
    """
    m = _require_hermitian(m)
    w, v = np.linalg.eigh(m)
    return w[::-1].copy(), v[:, ::-1].copy()


def general_eig(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a general complex matrix, dim <= 4.

    Sorted by descending real part, then descending imaginary part, so
    repeated runs produce identical output.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape[0] != m.shape[1] or m.shape[0] > 4:
        raise ValueError(f"expected a square matrix of dim <= 4, got {m.shape}")
    w = np.linalg.eigvals(m)
    order = np.lexsort((-w.imag, -w.real))
    return w[order]


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Hermitian PSD square root s with s @ s == m.

    Eigenvalues slightly below zero (floor -1e-10) are clamped; anything
    lower raises NotPSD.
    """
    m = _require_hermitian(m)
    w, v = np.linalg.eigh(m)
    if w.min() < tol.PSD_EVAL_FLOOR:
        raise NotPSD(f"eigenvalue {w.min():.3e} below PSD floor")
    w = np.clip(w, 0.0, None)
    s = (v * np.sqrt(w)) @ v.conj().T
    return hermitian_part(s)


def null_vector(m: np.ndarray) -> tuple[np.ndarray, bool]:
    """Unit-norm kernel vector of a square matrix, via SVD.

    Returns ``(v, degenerate)`` where v belongs to the smallest singular
    value and ``degenerate`` flags a second singular value under the same
    relative threshold (the caller decides what to do about it).
    Raises NoNullSpace when the smallest singular value is not small.
    """
    m = np.asarray(m, dtype=complex)
    _, s, vh = np.linalg.svd(m)
    smax = s[0]
    if s[-1] > tol.NULLSPACE_RTOL * smax:
        raise NoNullSpace(
            f"smallest singular value {s[-1]:.3e} exceeds "
            f"{tol.NULLSPACE_RTOL:.0e} * {smax:.3e}"
        )
    degenerate = len(s) > 1 and s[-2] <= tol.KERNEL_FLAG_RTOL * smax
    return vh[-1].conj().copy(), degenerate
