"""Exception types shared across the package."""

from __future__ import annotations


class BudgetError(Exception):
    """An enumeration or search would exceed its configured budget."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class ConfigError(Exception):
    """Malformed configuration or argument domain violation at the CLI surface."""


class MinorantError(ValueError):
    """No nontrivial minorant exists for the requested parameters."""


class NotClumpsError(ValueError):
    """A point set is not a clump configuration; carries the violating component."""

    def __init__(self, message: str, component: tuple[int, ...]):
        super().__init__(message)
        self.component = component


class NoDecompositionError(ValueError):
    """No local hyperplane cover with at most r_max planes avoids the reference node."""


class RankDeficiencyError(ValueError):
    """An interpolation system is numerically rank deficient."""

    def __init__(self, message: str, sigma_min: float):
        super().__init__(message)
        self.sigma_min = sigma_min


class ConvergenceError(RuntimeError):
    """The eigensolver did not reach its off-diagonal threshold."""

    def __init__(self, message: str, iterations: int, residual: float):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class CertificateError(RuntimeError):
    """A construction produced values violating its own proved certificate."""
