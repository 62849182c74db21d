from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from utils.helpers import format_number

ExactOrFloat = Union[Fraction, float]


class Decision(str, Enum):
    PRODUCT_IS_G = "ProductIsG"
    COMPLEMENT_PRODUCT_IS_G = "ComplementProductIsG"
    PRODUCTS_EQUAL = "ProductsEqual"
    INDETERMINATE = "Indeterminate"


class Trichotomy(str, Enum):
    ABOVE = "Above"    # A1·A2 = G
    BELOW = "Below"    # Ā1·Ā2 = G
    EQUAL = "Equal"    # A1·A2 = Ā1·Ā2


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


# Group and subset reports
class GroupReport(BaseModel):
    name: str
    group_id: str
    order: int = Field(..., ge=1)
    identity: str
    labels: Optional[List[str]] = None
    table: Optional[List[List[int]]] = None


class ProductReport(BaseModel):
    group: str
    factors: List[str]
    result: str
    cardinality: int
    equals_group: bool


class StabilizationReport(BaseModel):
    stabilizes: bool
    k: Optional[int] = None
    cycle_start: Optional[int] = None
    cycle_period: Optional[int] = None
    sizes: List[int] = Field(default_factory=list)

    @property
    def cycle(self) -> Optional[Tuple[int, int]]:
        if self.cycle_start is None:
            return None
        return self.cycle_start, self.cycle_period


# Group algebra reports
class CheckResult(BaseModel):
    name: str
    passed: bool
    witness: Optional[int] = None
    detail: str = ""


class VerificationReport(BaseModel):
    group: str
    family: str
    n: int
    cardinalities: List[int]
    d: int
    passed: bool
    witness: Optional[int] = None
    bruteforce_checked: bool = False
    checks: List[CheckResult] = Field(default_factory=list)
    counts: Optional[List[int]] = None
    counts_complement: Optional[List[int]] = None

    def summary_line(self) -> str:
        status = "PASS" if self.passed else f"FAIL (witness g={self.witness})"
        return f"{self.group} n={self.n} |A_i|={self.cardinalities} d={self.d} {status}"


class TruthCheck(BaseModel):
    product_is_group: bool
    complement_product_is_group: bool
    products_equal: bool
    consistent: bool


class DecisionReport(BaseModel):
    group: str
    family: str
    d: int
    theorem3: Decision
    by_sign: Decision
    truth: Optional[TruthCheck] = None


# Random walks
class ConvergenceReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    group: str
    carrier: str
    backend: Literal["rational", "float"]
    tol: float
    converged: bool
    n_at_tol: Optional[int] = None
    tv_trace: List[ExactOrFloat] = Field(default_factory=list)
    stabilization: StabilizationReport

    @field_validator("tv_trace", mode="before")
    @classmethod
    def parse_exact_values(cls, v):
        # strings only ever carry exact values
        return [Fraction(x) if isinstance(x, str) else x for x in v]

    @model_validator(mode="after")
    def coerce_to_backend(self) -> "ConvergenceReport":
        # newer pydantic parses JSON floats into Fraction as well
        kind = float if self.backend == "float" else Fraction
        self.tv_trace = [x if type(x) is kind else kind(x) for x in self.tv_trace]
        return self

    @field_serializer("tv_trace")
    def serialize_exact_values(self, trace: List[ExactOrFloat]) -> List[Union[str, float]]:
        return [format_number(x) if isinstance(x, Fraction) else x for x in trace]

    def to_csv_rows(self) -> List[Tuple[int, str]]:
        return [(n, format_number(tv)) for n, tv in enumerate(self.tv_trace, start=1)]


# Scenarios and sweeps
class ScenarioResult(BaseModel):
    name: str
    description: str
    holds: bool
    details: List[str] = Field(default_factory=list)


class ExamplesReport(BaseModel):
    results: List[ScenarioResult]

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results)


class SweepReport(BaseModel):
    groups: List[str]
    ns: List[int]
    families_per_group: int
    seed: int
    total: int
    passed: int
    failures: List[VerificationReport] = Field(default_factory=list)


class ScenarioSpec(BaseModel):
    """Validated inputs of one CLI invocation"""

    group: str = Field(..., min_length=1)
    subsets: List[str] = Field(default_factory=list)
    params: Dict[str, Any] = Field(default_factory=dict)
    output_format: OutputFormat = OutputFormat.TEXT

    @field_validator("group")
    @classmethod
    def group_must_not_be_blank(cls, v):
        if not v.strip():
            raise ValueError("Group descriptor cannot be empty")
        return v.strip()


class ErrorResponse(BaseModel):
    error: str
    message: str
    error_id: str
    exit_code: int
    details: Optional[Dict[str, Any]] = None
