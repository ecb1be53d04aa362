from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from YM_Beta.constants import FRAMINGS, SCHEMA_VERSION
from YM_Beta.validation import MAX_COUPLING_SAMPLES, MAX_MULTIPLICITY


class RepRequest(BaseModel):
    name: str
    multiplicity: int = Field(1, ge=1, le=MAX_MULTIPLICITY)
    path: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> "RepRequest":
        """NAME or NAME:MULT."""
        name, _, mult = text.partition(":")
        if not name.strip():
            raise ValueError(f"representation spec '{text}' has no name")
        try:
            multiplicity = int(mult) if mult else 1
        except ValueError:
            raise ValueError(f"multiplicity in '{text}' must be an integer") from None
        return cls(name=name.strip(), multiplicity=multiplicity)


class CouplingRequest(BaseModel):
    g0: float = Field(gt=0)
    lam_min: float = Field(gt=0)
    lam_max: float = Field(gt=0)
    n: int = Field(ge=1, le=MAX_COUPLING_SAMPLES)

    @model_validator(mode="after")
    def _ordered(self) -> "CouplingRequest":
        if self.lam_min > self.lam_max or (self.lam_min == self.lam_max and self.n > 1):
            raise ValueError("lambda_min must be below lambda_max")
        return self

    @classmethod
    def parse(cls, text: str) -> "CouplingRequest":
        """g0,lambda_min,lambda_max,n."""
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"--run-coupling expects g0,lambda_min,lambda_max,n; got '{text}'")
        try:
            g0, lam_min, lam_max = (float(part) for part in parts[:3])
            n = int(parts[3])
        except ValueError:
            raise ValueError(f"--run-coupling values must be numbers; got '{text}'") from None
        return cls(g0=g0, lam_min=lam_min, lam_max=lam_max, n=n)


class RunConfig(BaseModel):
    algebra: str = "su3"
    algebra_file: Optional[str] = None
    reps: List[RepRequest] = Field(default_factory=list)
    framing: str = "action"
    output_format: str = "table"
    coupling: Optional[CouplingRequest] = None
    workers: int = Field(1, ge=1, le=64)

    @field_validator("framing")
    @classmethod
    def _known_framing(cls, value: str) -> str:
        if value not in FRAMINGS:
            raise ValueError(f"framing must be one of {', '.join(FRAMINGS)}")
        return value

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in ("table", "doc"):
            raise ValueError("format must be 'table' or 'doc'")
        return value


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

class AlgebraSummary(BaseModel):
    name: str
    dim: int
    kappa_note: str
    simple_factors: int


class RepSummary(BaseModel):
    name: str
    dimV: int
    multiplicity: int
    lie_factor: Optional[str] = None


class DiagramEntry(BaseModel):
    label: str
    lie_slot: str
    raw: Dict[str, str]
    reduced: Optional[Dict[str, str]] = None
    cohomology_class: Optional[str] = None


class FactorEntry(BaseModel):
    indices: List[int]
    casimir: str
    matter: str
    b: str


class CouplingEntry(BaseModel):
    lam: float
    g: Optional[float] = None
    pole: bool = False


class BetaReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    algebra: AlgebraSummary
    reps: List[RepSummary]
    casimir: Optional[str] = None
    matter: Optional[str] = None
    diagrams: List[DiagramEntry]
    adjoint_class: str
    matter_class: str
    framing: str
    framing_factor: str
    b: Optional[str] = None
    per_factor: List[FactorEntry] = Field(default_factory=list)
    asymptotically_free: bool
    verdict: str
    critical_lambda: Optional[float] = None
    coupling: List[CouplingEntry] = Field(default_factory=list)
