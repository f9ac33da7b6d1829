"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ValidationError(ValueError):
    """A spectrum or exponent tuple violates its invariants."""


class UnsupportedHypothesisError(ValueError):
    """Inputs violate the hypotheses under which a closed form holds."""


class ConsistencyError(RuntimeError):
    """An identity that must hold exactly did not; always an implementation bug."""


class ResourceLimitError(RuntimeError):
    """The enumeration search space exceeds the configured ceiling."""

    def __init__(self, size, bound):
        self.size = size
        self.bound = bound
        super().__init__(
            f"search space of {size} spectra exceeds the enumeration limit {bound} "
            f"(raise it with --limit)"
        )
