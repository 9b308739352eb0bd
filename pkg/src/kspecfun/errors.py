"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the mathematical domain of the operation."""


class PoleError(ValueError):
    """The argument hits a pole of the (deformed) gamma function."""


class NoConvergence(RuntimeError):
    """A series or iteration failed to reach the requested tolerance."""


class NonFiniteSample(RuntimeError):
    """An integrand returned NaN or infinity at an interior quadrature node."""


class UnknownFunction(ValueError):
    """The CLI was asked to evaluate a function tag that is not registered."""


class UnknownIdentity(ValueError):
    """The CLI was asked to verify an identity tag that is not registered."""


class MissingParameter(ValueError):
    """A required parameter is absent from the CLI parameter map."""


class FixtureMissing(RuntimeError):
    """The fixture file is absent or an expected entry is missing."""


class FixtureMismatch(RuntimeError):
    """Recomputed fixture values deviate beyond the self-test threshold."""

    def __init__(self, offenders):
        self.offenders = list(offenders)
        ids = ", ".join(o["id"] for o in self.offenders)
        super().__init__(f"fixture self-test failed for: {ids}")
