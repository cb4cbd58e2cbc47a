"""Evaluated connection forms and gauge matrices."""

import numpy as np
from pydantic import BaseModel, Field, model_validator


class ConnectionForm(BaseModel):
    """Coefficient matrices of a matrix-valued one-form, one per coordinate differential."""
    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    dim: int = Field(ge=1)
    coeff: list[np.ndarray] = Field(description="dim x dim complex matrix for each differential")
    coords: tuple[str, ...] = Field(description="Names of the differentials, e.g. ('z1', 'z2')")

    @model_validator(mode='after')
    def check_shapes(self) -> 'ConnectionForm':
        if len(self.coeff) != len(self.coords):
            raise ValueError(f"{len(self.coeff)} coefficient matrices for {len(self.coords)} coordinates")
        for m in self.coeff:
            if m.shape != (self.dim, self.dim):
                raise ValueError(f"Coefficient matrix of shape {m.shape}, expected {(self.dim, self.dim)}")
        return self

    def along(self, direction) -> np.ndarray:
        """The matrix Σ direction_i · coeff_i."""
        return sum(d * m for d, m in zip(direction, self.coeff))


class GaugeEval(BaseModel):
    """Gauge matrix g = (Λ1+Λ2)^(2α)·g̃ at one point."""
    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    g: np.ndarray = Field(description="Full gauge matrix with the prefactor on the principal branch")
    reduced: np.ndarray = Field(description="Rational part g̃")
    dlog_extra: tuple[complex, complex] = Field(description="2α·∂log(Λ1+Λ2) for dΛ1 and dΛ2")

    @model_validator(mode='after')
    def invertible(self) -> 'GaugeEval':
        scale = float(np.max(np.abs(self.reduced))) ** 4
        if abs(np.linalg.det(self.reduced)) <= 1e-12 * scale:
            raise ValueError("Gauge matrix is singular at this point")
        return self
