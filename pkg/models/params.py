"""Parameter records for the Gauss and Appell hypergeometric families."""

from fractions import Fraction
from pydantic import BaseModel, Field, field_validator, model_validator

from misc.errors import PoleError

POLE_TOL = 1e-12


def near_nonpositive_integer(c: complex, tol: float = POLE_TOL) -> bool:
    c = complex(c)
    n = round(c.real)
    return n <= 0 and abs(c - n) < tol


class Hyp2F1Params(BaseModel):
    """Parameters (a, b; c) of Gauss' hypergeometric function."""
    model_config = {"frozen": True}

    a: complex
    b: complex
    c: complex

    def __init__(self, **data):
        super().__init__(**data)
        if near_nonpositive_integer(self.c):
            raise PoleError(f"Lower parameter c={self.c} is a non-positive integer")


class AppellF2Params(BaseModel):
    """Parameters (α; β1, β2; γ1, γ2) of Appell's F2."""
    model_config = {"frozen": True}

    alpha: complex
    beta1: complex
    beta2: complex
    gamma1: complex
    gamma2: complex

    def __init__(self, **data):
        super().__init__(**data)
        for name in ('gamma1', 'gamma2'):
            if near_nonpositive_integer(getattr(self, name)):
                raise PoleError(f"Lower parameter {name}={getattr(self, name)} is a non-positive integer")

    def swapped(self) -> 'AppellF2Params':
        """Parameters after exchanging the roles of the two variables."""
        return AppellF2Params(alpha=self.alpha, beta1=self.beta2, beta2=self.beta1,
                              gamma1=self.gamma2, gamma2=self.gamma1)

    @property
    def is_quadric(self) -> bool:
        return (abs(self.alpha - (self.beta1 + self.beta2 - 0.5)) < POLE_TOL
                and abs(self.gamma1 - 2 * self.beta1) < POLE_TOL
                and abs(self.gamma2 - 2 * self.beta2) < POLE_TOL)


class QuadricParams(BaseModel):
    """The pair (β1, β2) fixing an F2 with the quadric property."""
    model_config = {"frozen": True}

    beta1: Fraction = Field(description="β1, a rational in (0, 1)")
    beta2: Fraction = Field(description="β2, a rational in (0, 1)")

    @model_validator(mode='before')
    @classmethod
    def to_fractions(cls, data):
        if isinstance(data, dict):
            return {k: Fraction(v).limit_denominator(10 ** 12) if isinstance(v, float) else Fraction(v)
                    for k, v in data.items()}
        return data

    @field_validator('beta1', 'beta2', mode='after')
    @classmethod
    def in_unit_interval(cls, v: Fraction) -> Fraction:
        if not 0 < v < 1:
            raise ValueError(f"β must lie in (0, 1), got {v}")
        return v

    @property
    def alpha(self) -> Fraction:
        return self.beta1 + self.beta2 - Fraction(1, 2)

    def f2_params(self) -> AppellF2Params:
        return AppellF2Params(alpha=float(self.alpha), beta1=float(self.beta1), beta2=float(self.beta2),
                              gamma1=float(2 * self.beta1), gamma2=float(2 * self.beta2))

    @classmethod
    def from_signature(cls, r: int, p: int, q: int) -> 'QuadricParams':
        return cls(beta1=Fraction(q, 2 * r), beta2=Fraction(p, 2 * r))
