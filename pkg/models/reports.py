"""Pydantic models for verification results."""

from datetime import datetime, timezone
from typing import Any, Literal
from pydantic import BaseModel, Field, model_validator

from models.numbers import ComplexValue

REPORT_VERSION = '1.0'


class IdentityReport(BaseModel):
    """Numerical comparison of the two sides of an identity."""

    name: str
    inputs: dict[str, Any] = Field(default_factory=dict, description="JSON-friendly description of the case")
    lhs: ComplexValue
    rhs: ComplexValue
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool = False

    @model_validator(mode='after')
    def decide(self) -> 'IdentityReport':
        if abs(self.rhs.to_complex()) < 1:
            self.passed = self.abs_residual <= self.tolerance
        else:
            self.passed = self.rel_residual <= self.tolerance
        return self

    @classmethod
    def compare(cls, name: str, lhs: complex, rhs: complex, tolerance: float,
                inputs: dict[str, Any] | None = None) -> 'IdentityReport':
        diff = abs(complex(lhs) - complex(rhs))
        scale = abs(complex(rhs))
        return cls(name=name, inputs=inputs or {},
                   lhs=ComplexValue.from_complex(lhs), rhs=ComplexValue.from_complex(rhs),
                   abs_residual=diff, rel_residual=diff / scale if scale > 0 else diff,
                   tolerance=tolerance)

    @property
    def insight(self) -> str:
        if self.passed:
            return f"✅ **{self.name}** holds (residual {self.rel_residual:.2e})"
        return (f"❌ **{self.name}** fails: |lhs - rhs| = {self.abs_residual:.3e}, "
                f"relative {self.rel_residual:.3e} > {self.tolerance:.1e}")


class Certificate(BaseModel):
    """Outcome of an exact rational-function identity check."""

    kind: str = Field(description="Verifier that produced the certificate")
    id: str = Field(description="Identity name, e.g. a fibration label")
    signature: tuple[int, int, int] | None = None
    parameters: dict[str, str] = Field(default_factory=dict)
    zero: bool = Field(description="True iff every residual reduced to the zero polynomial")
    residuals: list[str] = Field(default_factory=list, description="Canonical text of each reduced residual")
    method: Literal['factored', 'expanded', 'mixed'] = 'factored'
    branch_residual: float | None = Field(None, description="Residual of the numeric root-of-unity spot check")
    branch_index: int | None = Field(None, description="k with lhs = exp(2πik/branch_order)·rhs at the spot point")
    branch_order: int | None = None
    expected_index: int | None = Field(None, description="Branch the identity is stated on, when pinned")
    notes: list[str] = Field(default_factory=list)
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec='seconds'))

    @property
    def passed(self) -> bool:
        return (self.zero and (self.branch_residual is None or self.branch_residual <= 1e-8)
                and (self.expected_index is None or self.branch_index == self.expected_index))

    @property
    def insight(self) -> str:
        label = f"{self.id}" + (f" at ({','.join(map(str, self.signature))})" if self.signature else '')
        if self.passed:
            return f"✅ **{label}** reduces to the zero polynomial ({self.method})"
        return f"❌ **{label}** leaves a nonzero residual: `{self.residuals[0] if self.residuals else '?'}`"


class CaseResult(BaseModel):
    """One row of a suite report."""

    name: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    lhs: ComplexValue | None = None
    rhs: ComplexValue | None = None
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool
    certificate: str | None = Field(None, description="Path of the certificate file, for exact cases")
    error: str | None = None

    @classmethod
    def from_report(cls, report: IdentityReport) -> 'CaseResult':
        return cls(**report.model_dump(exclude={'passed'}), passed=report.passed)

    @classmethod
    def from_certificate(cls, cert: Certificate, path: str | None) -> 'CaseResult':
        name = cert.id + (f"[{','.join(map(str, cert.signature))}]" if cert.signature else '')
        residual = 0.0 if cert.zero else 1.0
        return cls(name=f"{cert.kind}:{name}", inputs=dict(cert.parameters), abs_residual=residual,
                   rel_residual=residual, tolerance=0.0, passed=cert.passed, certificate=path)


class SuiteSummary(BaseModel):
    total: int
    passed: int


class SuiteReport(BaseModel):
    """JSON report written by the verify command."""

    suite: str
    version: str = REPORT_VERSION
    cases: list[CaseResult]
    summary: SuiteSummary

    @classmethod
    def assemble(cls, suite: str, cases: list[CaseResult]) -> 'SuiteReport':
        cases = sorted(cases, key=lambda c: c.name)
        return cls(suite=suite, cases=cases,
                   summary=SuiteSummary(total=len(cases), passed=sum(c.passed for c in cases)))

    @property
    def all_passed(self) -> bool:
        return self.summary.passed == self.summary.total


class RunConfig(BaseModel):
    """Resolved settings of one CLI invocation."""

    command: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    tolerance: float = Field(gt=0)
    output: str | None = None
    format: Literal['json', 'csv'] = 'json'
    parallelism: int = Field(1, ge=1)
    seed: int = 0
