"""Principal-branch complex helpers shared by every numeric module."""

import cmath
import math

from misc.errors import DomainError


def cpow(base: complex, exponent: complex) -> complex:
    """base**exponent as exp(exponent·Log(base)), cut on the negative real axis."""
    base = complex(base)
    if base.imag == 0:
        # -0.0 would put negative reals on the lower side of the cut
        base = complex(base.real, 0.0)
    exponent = complex(exponent)
    if base == 0:
        if exponent.real > 0:
            return 0j
        if exponent == 0:
            return 1 + 0j
        raise DomainError(f"0 raised to {exponent} is not finite")
    return checked(cmath.exp(exponent * cmath.log(base)))


def checked(value: complex) -> complex:
    """Return value, or raise DomainError when a component is NaN or infinite."""
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"Non-finite intermediate result {value}")
    return value


def relative_residual(lhs: complex, rhs: complex) -> float:
    diff = abs(complex(lhs) - complex(rhs))
    scale = abs(complex(rhs))
    return diff / scale if scale > 0 else diff
