"""Exception and warning types shared across the package."""


class CraqedError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParams(CraqedError, ValueError):
    """A system parameter violates its constraint.

    ``field`` names the first offending parameter.
    """

    def __init__(self, field: str, message: str = ""):
        self.field = field
        super().__init__(f"{field}: {message}" if message else field)


class DomainError(CraqedError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularPoint(CraqedError, ArithmeticError):
    """The scattering denominator vanishes; this wavenumber hosts the
    confined in-band bound state and must be handled by ``bic_find``."""


class ConvergenceError(CraqedError, RuntimeError):
    """Root bracketing or iteration failed; signals pathological input."""


class NumericalError(CraqedError, RuntimeError):
    """The underlying linear-algebra kernel did not converge."""


class RevivalWindowExceeded(CraqedError, ValueError):
    """Requested evolution time reaches the far-wall reflection echo of the
    truncated chain; pass ``allow_revival=True`` to override."""


class StepTooLarge(CraqedError, ValueError):
    """Integrator step exceeds the accuracy bound dt <= 0.05/xi."""


class WindowTooShort(UserWarning):
    """Analysis window holds fewer than 8 periods of the slowest predicted
    beat; frequency extraction is skipped, the mean is still reported."""
