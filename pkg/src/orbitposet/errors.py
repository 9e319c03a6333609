"""Exception types shared across the package."""


class OrbitPosetError(Exception):
    """Base class for all package-specific errors."""


class InvalidCartanError(OrbitPosetError):
    """An integer matrix violates the Cartan matrix axioms."""


class NotFiniteTypeError(OrbitPosetError):
    """Root enumeration exceeded its bound: the input is not finite type."""


class SizeBoundError(OrbitPosetError):
    """An enumeration or search would exceed a configured size bound."""


class ContextMismatchError(OrbitPosetError):
    """Group elements from different group contexts were combined."""


class ModelParseError(OrbitPosetError):
    """A model file is syntactically malformed.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class ModelValidationError(OrbitPosetError):
    """A structurally well-formed model violates a model invariant."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class OrbitValidationError(OrbitPosetError):
    """A [K, v, w] triple lies outside the orbit index set of the model."""
