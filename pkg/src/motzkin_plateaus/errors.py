"""Exception types raised by the series kernel, the path oracle and the engines."""


class MotzkinError(Exception):
    """Base class for every error raised by this package."""


class NonUnitConstantTerm(MotzkinError, ArithmeticError):
    """A reciprocal or square root was requested of a series without a unit constant term."""


class NonIntegralResult(MotzkinError, ArithmeticError):
    """A rational intermediate failed to clear to an integer at a public boundary."""


class NegativeExponent(MotzkinError, ValueError):
    """A substitution would produce a negative power of x."""


class CapExceeded(MotzkinError, ValueError):
    """Brute-force enumeration was asked for a length above the configured cap."""


class IntegralityViolation(NonIntegralResult):
    """A divided recursion produced a non-integer count."""


class BranchAssertionFailed(MotzkinError, ArithmeticError):
    """A quadratic-formula numerator did not have the shape the chosen root requires."""


class DegreeMismatch(MotzkinError, ArithmeticError):
    """A diagonal numerator does not have the degree predicted for it."""


class ClosedFormMismatch(MotzkinError, AssertionError):
    """A radical closed form disagrees with its continued-fraction definition.

    ``index`` is the first differing x-degree, ``expected`` the continued
    fraction coefficient and ``actual`` the closed-form coefficient there.
    """

    def __init__(self, name, index, expected, actual):
        self.name = name
        self.index = index
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"{name}: closed form differs from continued fraction at x^{index}: "
            f"expected {expected}, got {actual}"
        )


class ClosedFormMismatchWarning(UserWarning):
    """Non-fatal report of a ClosedFormMismatch."""
