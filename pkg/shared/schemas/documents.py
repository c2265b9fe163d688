"""
Document Models

Pydantic models for the JSON documents wbafrac reads and writes: scalars,
elements, whole algebras given by structure tables, r-form tables, fractions
and directed graphs.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator


class ScalarDoc(BaseModel):
    """An element of ℚ(ζ_n) as rational coefficients of 1, ζ, ζ², ..."""
    conductor: int = Field(..., ge=1)
    coeffs: List[str] = Field(default_factory=list, description="Rationals such as '3' or '-1/2'")
    text: Optional[str] = Field(default=None, description="Human-readable rendering, ignored on load")


class TermDoc(BaseModel):
    label: str
    degree: int = Field(..., ge=0)
    index: int = Field(..., ge=0)
    coeff: ScalarDoc


class ElementDoc(BaseModel):
    terms: List[TermDoc] = Field(default_factory=list)
    text: Optional[str] = None


class TensorTermDoc(BaseModel):
    left: str
    right: str
    coeff: ScalarDoc


class TensorDoc(BaseModel):
    terms: List[TensorTermDoc] = Field(default_factory=list)
    text: Optional[str] = None


class ProductEntry(BaseModel):
    left: str
    right: str
    value: ElementDoc


class CoproductEntry(BaseModel):
    basis: str
    value: TensorDoc


class WBADoc(BaseModel):
    """A based WBA given by its structure tables up to `cutoff`"""
    name: str
    conductor: int = Field(default=1, ge=1)
    cutoff: Optional[int] = Field(default=None, ge=0)
    labels: Dict[int, List[str]]
    unit: ElementDoc
    product: List[ProductEntry] = Field(default_factory=list)
    coproduct: List[CoproductEntry] = Field(default_factory=list)
    counit: Dict[str, ScalarDoc] = Field(default_factory=dict)

    @field_validator("labels")
    @classmethod
    def distinct_labels(cls, value: Dict[int, List[str]]) -> Dict[int, List[str]]:
        seen = [lab for labs in value.values() for lab in labs]
        if len(seen) != len(set(seen)):
            raise ValueError("basis labels must be distinct")
        return value


class RFormEntry(BaseModel):
    left: str
    right: str
    value: ScalarDoc
    bar: ScalarDoc


class RFormDoc(BaseModel):
    algebra: str
    mode: str
    entries: List[RFormEntry] = Field(default_factory=list)


class FractionDoc(BaseModel):
    """x/g₁⋯g_k as its numerator and the generator indices of the denominator word"""
    num: ElementDoc
    den: List[int] = Field(default_factory=list)
    names: List[str] = Field(default_factory=list, description="Generator names, indexed by den")
    text: Optional[str] = None


class GraphDoc(BaseModel):
    """A finite directed graph on vertices 0..vertices−1"""
    vertices: int = Field(..., ge=1)
    edges: List[Tuple[int, int]] = Field(default_factory=list)
