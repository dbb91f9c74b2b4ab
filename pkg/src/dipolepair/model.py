"""Physical inputs and operator assembly for the driven atom pair.

Units: the single-atom spontaneous decay constant gamma is the unit of
rate. Detuning, drive amplitude and the derived couplings are all
dimensionless multiples of it. Geometry enters through the dimensionless
interatomic distance k0r (separation times the transition wavenumber) and
the projection |mu . r| of the unit dipole moment onto the interatomic
axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from .errors import InvalidGeometry
from .linalg import kron

FINE_STRUCTURE = 1.0 / 137.0

# single-atom operators, basis (|e>, |g>)
I2 = np.eye(2, dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
SIGMA_MINUS = SIGMA_PLUS.conj().T
SIGMA_X = SIGMA_PLUS + SIGMA_MINUS
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])

# two-atom operators, computational basis |ee>, |eg>, |ge>, |gg>
SP1 = kron(SIGMA_PLUS, I2)
SP2 = kron(I2, SIGMA_PLUS)
SM1 = kron(SIGMA_MINUS, I2)
SM2 = kron(I2, SIGMA_MINUS)

_SQ2 = math.sqrt(2.0)

# computational -> coupled basis change; rows are |+1>, |0>, |-1>, |A>
TO_COUPLED = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0 / _SQ2, 1.0 / _SQ2, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 1.0 / _SQ2, -1.0 / _SQ2, 0.0],
    ],
    dtype=complex,
)

# columns of the triplet states in computational coordinates (4x3)
TRIPLET_EMBED = TO_COUPLED.conj().T[:, :3].copy()

SINGLET_KET = TO_COUPLED.conj().T[:, 3].copy()


@dataclass(frozen=True)
class AtomPairConfig:
    """Physical inputs, everything in units of gamma.

    delta:       detuning of the atoms from the driving field
    drive:       classical drive amplitude, >= 0
    k0r:         dimensionless interatomic distance, > 0
    mu_dot_rhat: |mu . r| in [0, 1], dipole projection on the axis
    gamma:       the rate unit, fixed to 1
    """

    delta: float = 0.0
    drive: float = 0.0
    k0r: float = 1.0
    mu_dot_rhat: float = 0.0
    gamma: float = 1.0

    def __post_init__(self):
        if self.drive < 0:
            raise ValueError("drive must be >= 0")
        if self.k0r <= 0:
            raise InvalidGeometry("k0r must be > 0")
        if not 0.0 <= self.mu_dot_rhat <= 1.0:
            raise ValueError("mu_dot_rhat must lie in [0, 1]")
        if self.gamma != 1.0:
            raise ValueError("gamma is the rate unit and is fixed to 1")


@dataclass(frozen=True)
class Couplings:
    """Derived coherent coupling and cross-decay rate, in units of gamma."""

    omega: float
    gamma12: float


@dataclass(frozen=True)
class DriveScaling:
    """Dimensionless drive bookkeeping: tau, quality factor, photon number."""

    tau: float
    q_factor: float
    nbar_v: float

    def __post_init__(self):
        if self.tau <= 0 or self.q_factor <= 0 or self.nbar_v <= 0:
            raise InvalidGeometry("tau, q_factor and nbar_v must all be > 0")


def dipole_coupling(k0r, mu_dot_rhat: float = 0.0):
    """Coherent dipole-dipole coupling Omega/gamma at distance x = k0r.

    Omega/gamma = (3/4) [ -(1-|mu.r|^2) cos x / x
                          + (1-3|mu.r|^2) (sin x / x^2 + cos x / x^3) ]

    Below x = 1e-3 the bracket is evaluated by series to avoid the 1/x^3
    cancellations. Accepts scalars or arrays.
    """
    x = np.asarray(k0r, dtype=float)
    if np.any(x <= 0):
        raise InvalidGeometry("k0r must be > 0")
    a = 1.0 - mu_dot_rhat**2
    b = 1.0 - 3.0 * mu_dot_rhat**2
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = 0.75 * (
            -a * np.cos(x) / x + b * (np.sin(x) / x**2 + np.cos(x) / x**3)
        )
    series = np.zeros_like(x)
    for k in range(9):
        f2k = math.factorial(2 * k)
        f2k1 = math.factorial(2 * k + 1)
        series += (-1.0) ** k * (
            b * x ** (2 * k - 3) / f2k + x ** (2 * k - 1) * (b / f2k1 - a / f2k)
        )
    series *= 0.75
    out = np.where(x < tol.SMALL_X, series, direct)
    return float(out) if np.isscalar(k0r) else out


def cross_decay(k0r):
    """Cross decay rate Gamma12/gamma at distance x = k0r.

    Gamma12/gamma = -3 [ cos x / x^2 - sin x / x^3 ], evaluated by series
    below x = 1e-3 (the two terms cancel to O(1) there). Tends to 1 as
    x -> 0. Accepts scalars or arrays.
    """
    x = np.asarray(k0r, dtype=float)
    if np.any(x <= 0):
        raise InvalidGeometry("k0r must be > 0")
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = -3.0 * (np.cos(x) / x**2 - np.sin(x) / x**3)
    series = np.zeros_like(x)
    for k in range(1, 8):
        series += (-1.0) ** k * (2 * k) * x ** (2 * k - 2) / math.factorial(2 * k + 1)
    series *= -3.0
    out = np.where(x < tol.SMALL_X, series, direct)
    return float(out) if np.isscalar(k0r) else out


def omega_dipole(cfg: AtomPairConfig) -> float:
    """Omega/gamma for the configured geometry."""
    return dipole_coupling(cfg.k0r, cfg.mu_dot_rhat)


def gamma_cross(cfg: AtomPairConfig) -> float:
    """Gamma12/gamma for the configured geometry."""
    return cross_decay(cfg.k0r)


def couplings_from_geometry(cfg: AtomPairConfig) -> Couplings:
    return Couplings(omega=omega_dipole(cfg), gamma12=gamma_cross(cfg))


def build_hamiltonian(cfg: AtomPairConfig, omega: float) -> np.ndarray:
    """4x4 Hamiltonian in the computational basis.

    H = sum_i [ (delta/2) sz_i + E (sp_i + sm_i) ]
        + omega (sp_1 sm_2 + sm_1 sp_2)

    Drive phase factors are a global gauge for transverse propagation and
    are absorbed into the raising/lowering operators, so every entry is
    real and the assembly is exactly symmetric.
    """
    h = 0.5 * cfg.delta * (kron(SIGMA_Z, I2) + kron(I2, SIGMA_Z))
    h = h + cfg.drive * (kron(SIGMA_X, I2) + kron(I2, SIGMA_X))
    h = h + omega * (SP1 @ SM2 + SM1 @ SP2)
    return h


def build_effective_hamiltonian(cfg: AtomPairConfig, c: Couplings) -> np.ndarray:
    """Non-Hermitian no-jump Hamiltonian, coupled basis (|+1>,|0>,|-1>,|A>).

    The singlet row and column are zero off the diagonal for every
    parameter value; its decay rate vanishes when gamma12 = gamma.
    """
    g, g12 = cfg.gamma, c.gamma12
    e = _SQ2 * cfg.drive
    return np.array(
        [
            [cfg.delta - 1j * g, e, 0.0, 0.0],
            [e, c.omega - 0.5j * (g + g12), e, 0.0],
            [0.0, e, -cfg.delta, 0.0],
            [0.0, 0.0, 0.0, -c.omega - 0.5j * (g - g12)],
        ],
        dtype=complex,
    )


def tau_of_geometry(k0r: float, q_factor: float, nbar_v: float) -> float:
    """tau = (3 / 4 pi alpha) / ( (k0r)^3 Q nbarV ), alpha = 1/137."""
    if k0r <= 0 or q_factor <= 0 or nbar_v <= 0:
        raise InvalidGeometry("k0r, q_factor and nbar_v must all be > 0")
    return 3.0 / (4.0 * math.pi * FINE_STRUCTURE) / (k0r**3 * q_factor * nbar_v)


def k0r_for_tau(tau: float, q_factor: float, nbar_v: float) -> float:
    """Distance at which tau_of_geometry() returns the requested tau."""
    if tau <= 0 or q_factor <= 0 or nbar_v <= 0:
        raise InvalidGeometry("tau, q_factor and nbar_v must all be > 0")
    return (3.0 / (4.0 * math.pi * FINE_STRUCTURE * tau * q_factor * nbar_v)) ** (
        1.0 / 3.0
    )
