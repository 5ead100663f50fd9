"""Exception types shared across the package."""


class NotHermitian(ValueError):
    """Raised when an operation requiring a Hermitian matrix receives one that is not."""


class StateInvalid(ValueError):
    """Raised when a matrix fails the density-matrix checks (trace, Hermiticity, positivity)."""


class NotDiagonalCorrelation(ValueError):
    """Raised when the trace-distance closed formula is applied outside its X-state domain."""


class ConventionMismatch(RuntimeError):
    """Raised when the printed fidelity formula disagrees with the definition-based value."""


class DomainError(ValueError):
    """Raised when a closed formula is evaluated at a degenerate parameter point."""
