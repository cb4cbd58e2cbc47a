"""Records for generalized Kummer surfaces and their moduli."""

from pydantic import BaseModel, Field

from misc.errors import SingularLocus
from models.numbers import ComplexValue

LOCUS_TOL = 1e-12


class SurfaceInvariants(BaseModel):
    """Numerical invariants of the surface S_0 built from signature rank r."""

    K2: int = Field(description="Self-intersection of the canonical class")
    euler: int = Field(description="Topological Euler characteristic")
    chi: int = Field(description="Holomorphic Euler characteristic")
    tau: int = Field(description="Signature of the intersection form")
    irregularity: int
    pg: int = Field(description="Geometric genus")
    h11: int

    def diamond(self) -> list[list[int]]:
        q, pg = self.irregularity, self.pg
        return [[1, q, pg], [q, self.h11, q], [pg, q, 1]]

    def consistency(self) -> dict[str, bool]:
        d = self.diamond()
        return {
            'noether': 12 * self.chi == self.K2 + self.euler,
            'signature_index': 3 * self.tau == self.K2 - 2 * self.euler,
            'chi_decomposition': self.chi == 1 - self.irregularity + self.pg,
            'hodge_symmetry': d == [list(row) for row in zip(*d)] and d == [row[::-1] for row in d[::-1]],
        }


class ModuliPoint(BaseModel):
    """Square roots (Λ1, Λ2) of the curve moduli on the generic locus."""
    model_config = {"frozen": True}

    Lambda1: complex
    Lambda2: complex

    def __init__(self, **data):
        super().__init__(**data)
        l1, l2 = self.Lambda1, self.Lambda2
        bad = [abs(l1), abs(l2), abs(l1 - 1), abs(l1 + 1), abs(l2 - 1), abs(l2 + 1),
               abs(l1 * l2 - 1), abs(l1 * l2 + 1), abs(l1 - l2), abs(l1 + l2)]
        if min(bad) < LOCUS_TOL:
            raise SingularLocus(f"Moduli ({l1}, {l2}) lie on the special locus")

    @property
    def lambdas(self) -> tuple[complex, complex]:
        return self.Lambda1 ** 2, self.Lambda2 ** 2


class DualityRow(BaseModel):
    """One row of the table tying (A, B, z1, z2) and the prefactor h to (Λ1, Λ2)."""

    row: int = Field(ge=1, le=4)
    A: ComplexValue
    B: ComplexValue
    z1: ComplexValue
    z2: ComplexValue
    h: ComplexValue = Field(description="Base of the prefactor h^(2α)")
    relations_hold: bool = Field(description="(z1, z2) = (1/A, 1 - B/A) to round-off")
