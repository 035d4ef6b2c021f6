"""Exception and warning types shared across the package."""


class CauchyGofError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CauchyGofError):
    """Input data or arguments violate a documented precondition."""


class NumericalError(CauchyGofError):
    """A numerical routine failed to converge or produced an unusable value."""


class HullViolationError(CauchyGofError):
    """The empirical likelihood constraint set is empty.

    Raised when the zero of the estimating equation cannot lie inside the
    probability simplex because all pseudo-values share one strict sign.
    """


class NumericalWarning(UserWarning):
    """A guarded numerical fallback was applied (tail clamp, endpoint clamp)."""
