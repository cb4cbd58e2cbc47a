"""Pydantic records for numeric values and numeric-kernel settings."""

import math
from pydantic import BaseModel, Field, field_validator, model_validator


class ComplexValue(BaseModel):
    """A complex number with finite binary64 components."""
    model_config = {"frozen": True}

    re: float = Field(description="Real part")
    im: float = Field(0.0, description="Imaginary part")

    @field_validator('re', 'im', mode='after')
    @classmethod
    def finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError(f"Non-finite component {v}")
        return v

    @classmethod
    def from_complex(cls, z: complex) -> 'ComplexValue':
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class QuadratureSpec(BaseModel):
    """Tolerances and refinement depth of the tanh-sinh rule."""
    model_config = {"frozen": True}

    abs_tol: float = Field(1e-13, gt=0, lt=1, description="Absolute tolerance")
    rel_tol: float = Field(1e-12, gt=0, lt=1, description="Relative tolerance")
    max_level: int = Field(12, ge=3, le=15, description="Deepest level of step halving")


class PathSpec(BaseModel):
    """Piecewise linear path through one or two complex coordinates."""

    waypoints: list[tuple[complex, ...]] = Field(description="Ordered points; each a tuple of coordinates")
    clearance: float = Field(1e-3, gt=0, description="Minimal distance to the singular locus")

    @model_validator(mode='after')
    def check_waypoints(self) -> 'PathSpec':
        if len(self.waypoints) < 2:
            raise ValueError("A path needs at least two waypoints")
        dims = {len(w) for w in self.waypoints}
        if len(dims) != 1:
            raise ValueError(f"Waypoints have mixed dimensions {sorted(dims)}")
        for a, b in zip(self.waypoints, self.waypoints[1:]):
            if all(x == y for x, y in zip(a, b)):
                raise ValueError(f"Consecutive waypoints coincide at {a}")
        return self

    @classmethod
    def segment(cls, start, end, clearance: float = 1e-3) -> 'PathSpec':
        as_tuple = lambda p: tuple(p) if isinstance(p, (tuple, list)) else (p,)
        return cls(waypoints=[as_tuple(start), as_tuple(end)], clearance=clearance)
