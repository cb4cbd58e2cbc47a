"""Exceptions raised by the numeric kernel and the verifiers."""


class PoleError(ValueError):
    """Argument lies on (or within tolerance of) a pole of Gamma."""


class DomainError(ValueError):
    """Arguments outside every evaluation route that is implemented."""


class SingularLocus(ValueError):
    """Point lies on a singular line of a connection or a denominator of a formula."""


class SingularProximity(ValueError):
    """Integration path comes closer to the singular locus than its clearance."""


class DivisionByZeroPoly(ValueError, ZeroDivisionError):
    """A denominator vanished identically."""


class ConstraintViolation(ValueError):
    """A curve signature or route precondition is not satisfied."""

    def __init__(self, which: str, message: str | None = None):
        self.which = which
        super().__init__(message or f"Constraint violated: {which}")


class NoConvergence(RuntimeError):
    """An iterative evaluation did not reach its tolerance."""


class StepUnderflow(RuntimeError):
    """The step size controller stalled."""


class TermLimitExceeded(RuntimeError):
    """An exact polynomial computation exceeded the configured term budget."""


class VerificationFailed(RuntimeError):
    """An exact identity reduced to a nonzero residual."""

    def __init__(self, name: str, leading_term: str):
        self.name = name
        self.leading_term = leading_term
        super().__init__(f"Identity {name} failed; residual leading term: {leading_term}")
