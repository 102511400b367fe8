"""
Report models - Pydantic models for everything RootLab emits as JSON.

Certification results carry explicit witnesses (the violating coweight, the
non-generating class, the unrepresented element) rather than bare booleans.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class Verdict(str, Enum):
    """Outcome of a single verified claim"""
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


class ConditionVerdict(BaseModel):
    """One named condition with its witness or counterexample"""
    name: str
    passed: bool
    witness: Optional[Any] = None
    detail: str = ""


class AdmissibilityReport(BaseModel):
    """The four conditions of a 1-admissible datum plus the injectivity sanity check."""
    gamma: List[int]
    conditions: List[ConditionVerdict] = Field(default_factory=list)

    # === Sanity check: minuscule dominant coweights in degree one ===
    minuscule_in_degree_one: List[List[int]] = Field(default_factory=list)
    injective_on_minuscule: bool = True

    @computed_field
    @property
    def overall(self) -> bool:
        return bool(self.conditions) and all(c.passed for c in self.conditions)

    def condition(self, name: str) -> Optional[ConditionVerdict]:
        for c in self.conditions:
            if c.name == name:
                return c
        return None

    def failed_conditions(self) -> List[str]:
        return [c.name for c in self.conditions if not c.passed]


class HilbertBasisReport(BaseModel):
    """Generators of the graded semigroup, certified up to a degree bound"""
    generators: List[List[int]] = Field(default_factory=list)
    degrees: List[int] = Field(default_factory=list)
    verified_up_to: int = 0
    is_free: bool = False
    representation_failures: List[List[int]] = Field(default_factory=list)
    non_unique: List[List[int]] = Field(default_factory=list)

    @computed_field
    @property
    def verified(self) -> bool:
        return not self.representation_failures


class DualConeVerdict(BaseModel):
    """Both inclusions of the dual-cone description, checked on enumerated data"""
    k_max: int
    box_radius: int
    checked_coweights: int = 0
    checked_weights: int = 0
    pairing_counterexamples: List[Dict[str, Any]] = Field(default_factory=list)
    span_counterexamples: List[List[int]] = Field(default_factory=list)

    @computed_field
    @property
    def verified(self) -> bool:
        return not self.pairing_counterexamples and not self.span_counterexamples


class ClaimResult(BaseModel):
    """A single mathematical claim and whether it held"""
    claim: str
    statement: str = ""
    verdict: Verdict = Verdict.PASSED
    witness: Optional[Any] = None

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAILED


class Report(BaseModel):
    """Top-level CLI report"""
    command: List[str] = Field(default_factory=list)
    datum: Optional[str] = None
    fingerprint: Optional[str] = None
    results: Dict[str, Any] = Field(default_factory=dict)
    claims: List[ClaimResult] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add_claim(self, claim: str, passed: bool, statement: str = "", witness: Any = None) -> ClaimResult:
        result = ClaimResult(
            claim=claim,
            statement=statement,
            verdict=Verdict.PASSED if passed else Verdict.FAILED,
            witness=witness,
        )
        self.claims.append(result)
        return result

    def failed_claims(self) -> List[ClaimResult]:
        return [c for c in self.claims if not c.passed]
