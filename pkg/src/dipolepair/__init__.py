"""Steady-state entanglement of two dipole-coupled, classically driven atoms."""

from .dynamics import (
    DensityMatrix,
    Liouvillian,
    analytic_steady_state,
    build_liouvillian,
    lamb_dicke_limit_state,
    propagate,
    restrict_triplet,
    solve_steady_state,
    steady_state_numeric,
    triplet_steady_state,
    unvec,
    vec,
)
from .entanglement import (
    ConcurrenceReport,
    admixture_concurrence,
    argmax_concurrence,
    binary_entropy,
    closed_form_concurrence,
    eof_from_concurrence,
    singlet_projector,
    spin_flip,
    spin_flip_spectrum,
    wootters_concurrence,
)
from .linalg import (
    BasisTag,
    general_eig,
    hermitian_eig,
    hermitian_part,
    kron,
    null_vector,
    psd_sqrt,
)
from .model import (
    FINE_STRUCTURE,
    AtomPairConfig,
    Couplings,
    DriveScaling,
    build_effective_hamiltonian,
    build_hamiltonian,
    couplings_from_geometry,
    cross_decay,
    dipole_coupling,
    gamma_cross,
    k0r_for_tau,
    omega_dipole,
    tau_of_geometry,
)
from .spectral import (
    DressedState,
    dressed_eigensystem,
    pure_concurrence,
    triplet_block,
    triplet_cubic_roots,
)

__version__ = "0.1.0"

__all__ = [
    "AtomPairConfig",
    "BasisTag",
    "ConcurrenceReport",
    "Couplings",
    "DensityMatrix",
    "DressedState",
    "DriveScaling",
    "FINE_STRUCTURE",
    "Liouvillian",
    "admixture_concurrence",
    "analytic_steady_state",
    "argmax_concurrence",
    "binary_entropy",
    "build_effective_hamiltonian",
    "build_hamiltonian",
    "build_liouvillian",
    "closed_form_concurrence",
    "couplings_from_geometry",
    "cross_decay",
    "dipole_coupling",
    "dressed_eigensystem",
    "eof_from_concurrence",
    "gamma_cross",
    "general_eig",
    "hermitian_eig",
    "hermitian_part",
    "k0r_for_tau",
    "kron",
    "lamb_dicke_limit_state",
    "null_vector",
    "omega_dipole",
    "propagate",
    "psd_sqrt",
    "pure_concurrence",
    "restrict_triplet",
    "singlet_projector",
    "solve_steady_state",
    "spin_flip",
    "spin_flip_spectrum",
    "steady_state_numeric",
    "tau_of_geometry",
    "triplet_block",
    "triplet_cubic_roots",
    "triplet_steady_state",
    "unvec",
    "vec",
    "wootters_concurrence",
]
