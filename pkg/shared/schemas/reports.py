"""
Report Models

Pydantic models for axiom-check reports, localization summaries and dimension
tables. Every checker in backend.core returns one of these.
"""

import logging
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    """Outcome of a fraction equality test"""
    EQUAL = "equal"
    DISTINCT = "distinct"
    INDETERMINATE = "indeterminate"


class GroupLikeKind(str, Enum):
    RIGHT = "right"
    LEFT = "left"
    BOTH = "both"
    NEITHER = "neither"


class Violation(BaseModel):
    """A single failed identity"""
    axiom: str = Field(..., description="Identity id, e.g. 'wba.delta_mul'")
    witness: List[str] = Field(default_factory=list, description="Basis labels the identity failed on")
    lhs: Optional[str] = None
    rhs: Optional[str] = None


class Report(BaseModel):
    """Result of one check suite"""
    suite: str
    subject: str
    cutoff: Optional[int] = None
    checked: int = Field(default=0, ge=0, description="Number of identity instances evaluated")
    violations: List[Violation] = Field(default_factory=list)
    suppressed: int = Field(default=0, ge=0, description="Violations counted but not stored")
    notes: Dict[str, Any] = Field(default_factory=dict)
    max_witnesses: int = Field(default=10, ge=1, exclude=True)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.suppressed

    def failed_axioms(self) -> List[str]:
        return sorted({v.axiom for v in self.violations})

    def tick(self, count: int = 1):
        self.checked += count

    def add_violation(self, axiom: str, witness: List[str], lhs: Optional[str] = None, rhs: Optional[str] = None):
        """Record a violation, keeping at most max_witnesses per identity"""
        stored = sum(1 for v in self.violations if v.axiom == axiom)
        if stored >= self.max_witnesses:
            self.suppressed += 1
            return
        self.violations.append(Violation(axiom=axiom, witness=witness, lhs=lhs, rhs=rhs))
        logger.debug(f"{self.suite} violation {axiom} at {witness}: {lhs} != {rhs}")

    def merge(self, other: "Report", prefix: Optional[str] = None) -> "Report":
        """Fold another report into this one"""
        self.checked += other.checked
        self.suppressed += other.suppressed
        for v in other.violations:
            axiom = f"{prefix}.{v.axiom}" if prefix else v.axiom
            self.violations.append(v.model_copy(update={"axiom": axiom}))
        return self

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return f"{state} {self.suite} [{self.subject}] checked={self.checked} violations={len(self.violations) + self.suppressed}"


class DimensionTable(BaseModel):
    """Graded dimensions of a localization"""
    subject: str
    cutoff: int
    bound: int
    host_dims: Dict[int, int] = Field(default_factory=dict)
    kernel_dims: Dict[int, int] = Field(default_factory=dict)
    numerator_dims: Dict[int, int] = Field(default_factory=dict, description="dim φ(H_d)")
    fraction_dims: Dict[int, int] = Field(default_factory=dict, description="dim span{x/w : x ∈ H_d, |w| ≤ bound}")
    stabilization: Dict[int, Dict[int, int]] = Field(
        default_factory=dict, description="fraction_dims for each bound 0..bound"
    )

    @property
    def stabilized(self) -> bool:
        if len(self.stabilization) < 2:
            return False
        bounds = sorted(self.stabilization)
        return self.stabilization[bounds[-1]] == self.stabilization[bounds[-2]]


class RunReport(BaseModel):
    """Top-level document emitted by the CLI"""
    tool: str = "wbafrac"
    version: str
    command: str
    example: Optional[str] = None
    parameters: Dict[str, Any] = Field(default_factory=dict)
    strategy: Optional[str] = None
    reports: List[Report] = Field(default_factory=list)
    dimensions: Optional[DimensionTable] = None
    results: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)
