"""Exception types raised across the package."""


class DipolePairError(Exception):
    """Base class for all library errors."""


class NotHermitian(DipolePairError):
    """Matrix fails the Hermiticity tolerance."""


class NotPSD(DipolePairError):
    """Matrix has an eigenvalue below the PSD floor."""


class NoNullSpace(DipolePairError):
    """Smallest singular value is not small enough to count as a kernel."""


class DegenerateKernel(DipolePairError):
    """Kernel is more than one-dimensional; the steady state is not unique."""


class InvalidGeometry(DipolePairError):
    """Nonpositive distance, quality factor or photon number."""


class DegenerateDrive(DipolePairError):
    """All triplet eigenvalues coincide; eigenvectors are not unique."""


class NotNormalized(DipolePairError):
    """State vector norm differs from one beyond tolerance."""


class InvalidState(DipolePairError):
    """Density-matrix invariants (Hermitian, unit trace, PSD) violated."""


class OutOfRange(DipolePairError):
    """Scalar argument outside its documented domain."""


class InvalidRegime(DipolePairError):
    """Closed-form result requested outside its regime of validity."""


class StepTooLarge(DipolePairError):
    """Integrator trace drift exceeded its bound; halve the step."""


class InvalidRegimeWarning(UserWarning):
    """Closed form evaluated at a degenerate boundary; limit value returned."""
