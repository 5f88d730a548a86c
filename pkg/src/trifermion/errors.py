"""Domain errors.  The CLI reports ``type(err).__name__`` verbatim."""


class DomainError(Exception):
    """Base class for errors caused by the input rather than by I/O."""


class NotSOV(DomainError):
    """A fermionic state has weight outside the single-occupancy subspace."""


class NotUnitary(DomainError):
    pass


class ZeroState(DomainError):
    pass


class NotNormalized(DomainError):
    pass


class NotInDelta(DomainError):
    pass


class NotInDeltaPrime(DomainError):
    pass


class Inconsistent(DomainError):
    """Reconstructed canonical point does not reproduce the input invariants."""


class CalibrationFailed(DomainError):
    pass


class OptimizerFailed(DomainError):
    pass
