"""Exception hierarchy shared by every module."""


class PValentError(Exception):
    """Base class for all toolkit errors."""


class ParameterError(PValentError, ValueError):
    """Invalid parameter values (violated type invariants)."""


class NormalizationError(ParameterError):
    """A function handed to a verifier does not satisfy phi(0) = 1."""


class DomainError(PValentError, ValueError):
    """Arguments outside the domain where a formula is defined."""


class HypothesisError(DomainError):
    """Parameters fall outside a theorem's hypotheses.

    ``violations`` lists the failed conditions in readable form.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("outside theorem hypotheses: " + "; ".join(self.violations))


class NumericError(PValentError, ArithmeticError):
    """A numerical procedure failed (non-convergence, vanishing divisor)."""


class PoleError(NumericError):
    """A denominator vanished at a sample point."""

    def __init__(self, message, witness):
        self.witness = witness
        super().__init__(f"{message} at z={witness!r}")


class NoRootError(NumericError):
    """No sign change found for a root bracket."""
