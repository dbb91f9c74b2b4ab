"""Numeric tolerances, collected in one table so tests and code agree."""

# linear algebra kernels
HERMITICITY_ATOL = 1e-10      # max-abs of m - m^dagger
EIGEN_RESIDUAL_ATOL = 1e-9    # ||m v - lam v|| for Hermitian eigenpairs
GENERAL_EIG_ATOL = 1e-8       # characteristic-polynomial agreement
PSD_EVAL_FLOOR = -1e-10       # eigenvalues below this fail the PSD check
PSD_SQRT_ATOL = 1e-8          # ||s s - m||
NULLSPACE_RTOL = 1e-8         # smallest singular value relative to largest
KERNEL_FLAG_RTOL = 1e-8       # second-smallest singular value: degeneracy flag
KERNEL_EXACT_RTOL = 1e-12     # below this the kernel is genuinely multi-dimensional

# density matrices
DENSITY_HERM_ATOL = 1e-10
DENSITY_TRACE_ATOL = 1e-10
DENSITY_EVAL_FLOOR = -1e-9
STATE_NORM_ATOL = 1e-10

# dynamics
TRACE_DRIFT_MAX = 1e-6        # propagate() aborts past this drift
COLLECTIVE_DECAY_TOL = 1e-12  # |gamma12 - gamma| below this: singlet decoupled

# geometry factors
SMALL_X = 1e-3                # switch to series evaluation below this k0r
