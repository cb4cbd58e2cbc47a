"""Complex Gamma function by the Lanczos approximation."""

import cmath
import math

from misc.errors import DomainError, PoleError

POLE_TOL = 1e-12

# Lanczos coefficients for g = 7, n = 9
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2 * math.pi)


def _check_pole(z: complex) -> None:
    n = round(z.real)
    if n <= 0 and abs(z - n) < POLE_TOL:
        raise PoleError(f"Gamma has a pole at {n} (argument {z})")


def gamma(z: complex) -> complex:
    """
    Evaluate Γ(z) for complex z.

    Uses the reflection formula Γ(z)Γ(1-z) = π/sin(πz) for Re z < 1/2.

    Parameters
    ----------
    z : complex argument, not within 1e-12 of a non-positive integer

    Returns
    -------
    complex value of Γ(z)
    """
    z = complex(z)
    _check_pole(z)
    if z.real < 0.5:
        value = cmath.pi / (cmath.sin(cmath.pi * z) * gamma(1 - z))
    else:
        z -= 1
        x = LANCZOS_COEFFICIENTS[0]
        for i in range(1, LANCZOS_G + 2):
            x += LANCZOS_COEFFICIENTS[i] / (z + i)
        t = z + LANCZOS_G + 0.5
        try:
            value = _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * x
        except OverflowError as e:
            raise DomainError(f"Gamma overflows at {z + 1}: {e}")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise DomainError(f"Gamma is not representable at {z}")
    return value


def rgamma(z: complex) -> complex:
    """1/Γ(z), which is zero at the poles of Γ."""
    z = complex(z)
    n = round(z.real)
    if n <= 0 and abs(z - n) < POLE_TOL:
        return 0j
    return 1 / gamma(z)


def beta(a: complex, b: complex) -> complex:
    return gamma(a) * gamma(b) / gamma(a + b)
