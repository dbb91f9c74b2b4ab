"""Dissipative dynamics: superoperator, steady states, time propagation.

Convention: the decay constants enter the dissipator at half their nominal
value (gamma/2 and gamma12/2 per channel). Under this amplitude-rate
normalization the hard-coded steady state of ``analytic_steady_state`` is
exact, and the fully excited pair population relaxes at rate gamma.

Vectorization is column-stacking throughout: entry (i, j) of an n x n
matrix sits at flat index i + n*j, and vec(A X B) = kron(B.T, A) vec(X).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from .errors import (
    DegenerateKernel,
    InvalidRegime,
    InvalidRegimeWarning,
    InvalidState,
    NoNullSpace,
    StepTooLarge,
)
from .linalg import BasisTag, hermitian_part, kron
from .model import (
    SM1,
    SM2,
    SP1,
    SP2,
    TO_COUPLED,
    TRIPLET_EMBED,
    AtomPairConfig,
    Couplings,
    build_hamiltonian,
)

_SQ2 = math.sqrt(2.0)

_I4 = np.eye(4, dtype=complex)

# flat indices of the 3x3 triplet block inside a column-stacked 4x4
_TRIPLET_IDX = np.array([i + 4 * j for j in range(3) for i in range(3)])


def vec(m: np.ndarray) -> np.ndarray:
    """Column-stack a matrix into a vector."""
    return np.asarray(m, dtype=complex).flatten(order="F")


def unvec(v: np.ndarray, n: int) -> np.ndarray:
    """Inverse of vec() for an n x n matrix."""
    return np.asarray(v, dtype=complex).reshape((n, n), order="F")


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-one, PSD matrix with a basis tag.

    3x3 for the TRIPLET tag, 4x4 otherwise. Violating any invariant
    raises InvalidState at construction.
    """

    matrix: np.ndarray
    basis: BasisTag

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        dim = 3 if self.basis is BasisTag.TRIPLET else 4
        if m.shape != (dim, dim):
            raise InvalidState(f"expected {dim}x{dim} for {self.basis}, got {m.shape}")
        if np.abs(m - m.conj().T).max() > tol.DENSITY_HERM_ATOL:
            raise InvalidState("not Hermitian within tolerance")
        if abs(np.trace(m).real - 1.0) > tol.DENSITY_TRACE_ATOL:
            raise InvalidState(f"trace {np.trace(m).real!r} is not 1")
        if np.linalg.eigvalsh(m).min() < tol.DENSITY_EVAL_FLOOR:
            raise InvalidState("negative eigenvalue beyond tolerance")

    def to_basis(self, basis: BasisTag) -> "DensityMatrix":
        """Convert between bases; the triplet tag embeds with zero singlet."""
        if basis is self.basis:
            return self
        m = self.matrix
        if self.basis is BasisTag.TRIPLET:
            if basis is BasisTag.COUPLED:
                out = np.zeros((4, 4), dtype=complex)
                out[:3, :3] = m
                return DensityMatrix(out, BasisTag.COUPLED)
            return DensityMatrix(
                TRIPLET_EMBED @ m @ TRIPLET_EMBED.conj().T, BasisTag.COMPUTATIONAL
            )
        if self.basis is BasisTag.COMPUTATIONAL and basis is BasisTag.COUPLED:
            return DensityMatrix(TO_COUPLED @ m @ TO_COUPLED.conj().T, basis)
        if self.basis is BasisTag.COUPLED and basis is BasisTag.COMPUTATIONAL:
            return DensityMatrix(TO_COUPLED.conj().T @ m @ TO_COUPLED, basis)
        raise InvalidState(f"cannot convert {self.basis} to {basis}")

    def singlet_weight(self) -> float:
        """Population of the antisymmetric state."""
        if self.basis is BasisTag.TRIPLET:
            return 0.0
        return float(self.to_basis(BasisTag.COUPLED).matrix[3, 3].real)


@dataclass(frozen=True)
class Liouvillian:
    """16x16 superoperator acting on column-stacked 4x4 density matrices."""

    matrix: np.ndarray
    basis: BasisTag

    def to_coupled(self) -> "Liouvillian":
        if self.basis is BasisTag.COUPLED:
            return self
        u = kron(TO_COUPLED.conj(), TO_COUPLED)
        return Liouvillian(u @ self.matrix @ u.conj().T, BasisTag.COUPLED)


def build_liouvillian(cfg: AtomPairConfig, c: Couplings) -> Liouvillian:
    """Superoperator of the master equation, computational basis.

    Generates -i[H, rho] plus the correlated decay of both atoms, with
    channel rates (gamma/2, gamma12/2) as described in the module
    docstring. Trace is preserved: vec(I) is a left null vector.
    """
    h = build_hamiltonian(cfg, c.omega)
    lops_minus = (SM1, SM2)
    lops_plus = (SP1, SP2)
    rates = 0.5 * np.array(
        [[cfg.gamma, c.gamma12], [c.gamma12, cfg.gamma]], dtype=float
    )
    lm = -1j * (kron(_I4, h) - kron(h.T, _I4))
    for i in range(2):
        for j in range(2):
            r = rates[i, j]
            a = lops_plus[i] @ lops_minus[j]
            lm = lm + 0.5 * r * (
                2.0 * kron(lops_plus[j].T, lops_minus[i])
                - kron(_I4, a)
                - kron(a.T, _I4)
            )
    return Liouvillian(lm, BasisTag.COMPUTATIONAL)


def _state_from_kernel(v: np.ndarray, n: int, basis: BasisTag) -> DensityMatrix:
    rho = unvec(v, n)
    tr = np.trace(rho)
    if abs(tr) < 1e-10:
        raise DegenerateKernel("kernel vector is traceless, steady state not unique")
    rho = rho * (tr.conjugate() / abs(tr))  # rotate the arbitrary global phase away
    rho = hermitian_part(rho)
    return DensityMatrix(rho / np.trace(rho).real, basis)


def steady_state_numeric(liouv: Liouvillian) -> DensityMatrix:
    """Kernel of the superoperator, Hermitized and trace-normalized.

    Raises DegenerateKernel when the kernel is more than one-dimensional
    at working precision, which happens exactly when gamma12 = gamma (the
    singlet decouples); restrict to the triplet sector in that case.
    """
    _, s, vh = np.linalg.svd(liouv.matrix)
    smax = s[0]
    if s[-1] > tol.NULLSPACE_RTOL * smax:
        raise NoNullSpace(f"no kernel: smallest singular value {s[-1]:.3e}")
    if s[-2] <= tol.KERNEL_EXACT_RTOL * smax:
        raise DegenerateKernel(
            "steady state is not unique (singlet sector decoupled); "
            "restrict to the triplet sector"
        )
    return _state_from_kernel(vh[-1].conj(), 4, liouv.basis)


def restrict_triplet(liouv: Liouvillian) -> np.ndarray:
    """9x9 sub-superoperator acting on the triplet block, coupled basis."""
    lc = liouv.to_coupled().matrix
    return lc[np.ix_(_TRIPLET_IDX, _TRIPLET_IDX)]


def triplet_steady_state(liouv: Liouvillian) -> DensityMatrix:
    """Steady state of the triplet-restricted dynamics (singlet weight 0)."""
    l9 = restrict_triplet(liouv)
    _, s, vh = np.linalg.svd(l9)
    if s[-1] > tol.NULLSPACE_RTOL * s[0]:
        raise NoNullSpace(f"no triplet kernel: smallest singular value {s[-1]:.3e}")
    return _state_from_kernel(vh[-1].conj(), 3, BasisTag.TRIPLET)


def solve_steady_state(cfg: AtomPairConfig, c: Couplings) -> DensityMatrix:
    """Steady state for a parameter point, coupled basis.

    When gamma12 = gamma within 1e-12 the full kernel is degenerate and
    the solver restricts to the triplet sector (symmetric initial
    conditions, singlet weight exactly zero). The same fallback handles
    parameter points whose kernel is degenerate at working precision.
    """
    liouv = build_liouvillian(cfg, c)
    if abs(c.gamma12 - cfg.gamma) <= tol.COLLECTIVE_DECAY_TOL:
        return triplet_steady_state(liouv).to_basis(BasisTag.COUPLED)
    try:
        return steady_state_numeric(liouv).to_basis(BasisTag.COUPLED)
    except DegenerateKernel:
        return triplet_steady_state(liouv).to_basis(BasisTag.COUPLED)


def analytic_steady_state(omega: float, drive: float) -> DensityMatrix:
    """Exact steady state in the triplet sector for gamma12 = gamma, delta = 0.

    Hard-coded closed form in the basis (|+1>, |0>, |-1>), normalized by
    its trace N = 192 E^4 + 16 E^2 + 4 W^2 + 1. At drive = 0 the matrix
    degenerates to the ground state diag(0, 0, 1), returned with a warning.
    """
    if drive < 0:
        raise InvalidRegime("drive must be > 0 for the closed-form steady state")
    if drive == 0.0:
        warnings.warn(
            "drive = 0: steady state degenerates to the ground state",
            InvalidRegimeWarning,
            stacklevel=2,
        )
        return DensityMatrix(np.diag([0.0, 0.0, 1.0]), BasisTag.TRIPLET)
    e, w = drive, omega
    m = np.array(
        [
            [
                64.0 * e**4,
                -16j * e**3 * _SQ2,
                8.0 * e**2 * (2j * w - 1.0),
            ],
            [
                16j * e**3 * _SQ2,
                8.0 * e**2 * (1.0 + 8.0 * e**2),
                -2.0 * e * _SQ2 * (2.0 * w + 1j + 8j * e**2),
            ],
            [
                -8.0 * e**2 * (2j * w + 1.0),
                -2.0 * e * _SQ2 * (2.0 * w - 1j - 8j * e**2),
                4.0 * (w**2 + 2.0 * e**2 + 16.0 * e**4) + 1.0,
            ],
        ],
        dtype=complex,
    )
    return DensityMatrix(m / np.trace(m).real, BasisTag.TRIPLET)


def lamb_dicke_limit_state(tau: float) -> DensityMatrix:
    """Strong-drive limit of the steady state at fixed tau = W / E^2.

    (1 / (tau^2 + 48)) [[16, 0, 4 i tau], [0, 16, 0], [-4 i tau, 0, 16 + tau^2]]
    on (|+1>, |0>, |-1>); trace is exactly one.
    """
    m = np.array(
        [
            [16.0, 0.0, 4j * tau],
            [0.0, 16.0, 0.0],
            [-4j * tau, 0.0, 16.0 + tau**2],
        ],
        dtype=complex,
    )
    return DensityMatrix(m / (tau**2 + 48.0), BasisTag.TRIPLET)


def propagate(
    liouv: Liouvillian, rho0: DensityMatrix, t_final: float, dt: float
) -> tuple[np.ndarray, list[DensityMatrix]]:
    """Classical 4th-order integration of rho' = L rho.

    Returns (times, states) sampled at every step including t = 0. Each
    stored state is Hermitized; trace drift beyond 1e-6 raises
    StepTooLarge (halve dt and retry).
    """
    if dt <= 0:
        raise ValueError("dt must be > 0")
    if t_final < dt:
        raise ValueError("t_final must be >= dt")
    if rho0.basis is not liouv.basis:
        raise InvalidState(
            f"cross-basis arithmetic: state is {rho0.basis}, generator {liouv.basis}"
        )
    lm = liouv.matrix
    nsteps = int(math.ceil(t_final / dt - 1e-9))
    times = dt * np.arange(nsteps + 1)
    v = vec(rho0.matrix)
    states = [rho0]
    for _ in range(nsteps):
        k1 = lm @ v
        k2 = lm @ (v + 0.5 * dt * k1)
        k3 = lm @ (v + 0.5 * dt * k2)
        k4 = lm @ (v + dt * k3)
        v = v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        rho = hermitian_part(unvec(v, 4))
        drift = abs(np.trace(rho).real - 1.0)
        if drift > tol.TRACE_DRIFT_MAX:
            raise StepTooLarge(
                f"trace drift {drift:.3e} exceeds {tol.TRACE_DRIFT_MAX:.0e}; "
                f"halve dt (currently {dt})"
            )
        try:
            states.append(DensityMatrix(rho / np.trace(rho).real, liouv.basis))
        except InvalidState as exc:
            raise StepTooLarge(
                f"integration error broke a state invariant ({exc}); "
                f"halve dt (currently {dt})"
            ) from exc
    return times, states
