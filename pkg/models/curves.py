"""Records describing superelliptic curves SE(λ)_{r,p,q}."""

from fractions import Fraction
from math import gcd
from typing import Literal

from pydantic import BaseModel, Field

from misc.errors import ConstraintViolation


def signature_violation(r: int, p: int, q: int) -> str | None:
    """Name of the first range or divisibility constraint (r, p, q) violates, or None."""
    if min(r, p, q) < 1:
        return 'positive'
    checks = [
        ('0<p<2r', 0 < p < 2 * r),
        ('0<q<2r', 0 < q < 2 * r),
        ('-r<p-q<r', -r < p - q < r),
        ('r<p+q<3r', r < p + q < 3 * r),
        ('gcd(p,2r)=1', gcd(p, 2 * r) == 1),
        ('gcd(p+q-r,2r)=1', gcd(p + q - r, 2 * r) == 1),
        ('gcd(p-q+r,2r)=1', gcd(p - q + r, 2 * r) == 1),
    ]
    for label, ok in checks:
        if not ok:
            return label
    return None


class CurveSignature(BaseModel):
    """Integer triple (r, p, q) with the range and divisibility constraints."""
    model_config = {"frozen": True}

    r: int = Field(description="Half the degree of y")
    p: int
    q: int

    def __init__(self, **data):
        super().__init__(**data)
        which = signature_violation(self.r, self.p, self.q)
        if which is not None:
            raise ConstraintViolation(which, f"Signature ({self.r},{self.p},{self.q}) violates {which}")

    @property
    def beta1(self) -> Fraction:
        return Fraction(self.q, 2 * self.r)

    @property
    def beta2(self) -> Fraction:
        return Fraction(self.p, 2 * self.r)

    @property
    def alpha(self) -> Fraction:
        return self.beta1 + self.beta2 - Fraction(1, 2)

    def swapped(self) -> 'CurveSignature':
        """The signature (r, 2r-p, 2r-q) of the partner curve."""
        return CurveSignature(r=self.r, p=2 * self.r - self.p, q=2 * self.r - self.q)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.r, self.p, self.q

    def __str__(self) -> str:
        return f'{self.r},{self.p},{self.q}'

    @classmethod
    def parse(cls, text: str) -> 'CurveSignature':
        r, p, q = (int(t) for t in text.split(','))
        return cls(r=r, p=p, q=q)


class BranchConstants(BaseModel):
    """Exponents and cycle constants of a signature."""

    beta1: Fraction
    beta2: Fraction
    cycle_constants: list[complex] = Field(description="C_k for k = 1..2r-1")
    phase: complex = Field(description="(-1)^β2 on the principal branch")


class PuiseuxRecord(BaseModel):
    """Multiplicity and Puiseux pair of one singular point."""

    point: Literal['0', '1', 'lambda', 'infinity']
    multiplicity: int
    pair: tuple[int, int]
