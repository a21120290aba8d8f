"""Shared exception and warning types."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class StabilityError(DomainError):
    """Explicit time step violates the diffusion stability bound."""


class ConsistencyError(RuntimeError):
    """A built-in cross-check between two computation routes failed."""


class ConfigError(Exception):
    """Run configuration failed validation; the message carries the key path."""


class ApproximationWarning(UserWarning):
    """Evaluation point strains the validity of a near-axis approximation."""
