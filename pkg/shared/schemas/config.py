"""
Configuration Models

The example manifest entry and the validated command configuration.
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from shared.schemas.reports import GroupLikeKind

SUITES = (
    "wba",
    "coquasi",
    "grouplike",
    "almost_central",
    "ore",
    "antipode",
    "localization",
    "coideal",
    "central",
    "laurent",
    "universal",
    "weakness",
)

STRATEGIES = ("declared-regular", "finite-test-set", "bounded-search")


class ExampleDescriptor(BaseModel):
    """One entry of shared/dictionaries/catalog.yaml"""
    name: str
    title: str
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Default constructor parameters")
    cutoff: Optional[int] = Field(default=None, ge=0, description="None for finite-dimensional examples")
    generators: List[str] = Field(default_factory=list, description="Named elements generating G")
    strategy: str = "bounded-search"
    test_set: List[str] = Field(default_factory=list, description="Named annihilator candidates")
    group_likes: Dict[str, GroupLikeKind] = Field(default_factory=dict)
    suites: List[str] = Field(default_factory=list)

    model_config = ConfigDict(use_enum_values=True)

    @field_validator("suites")
    @classmethod
    def known_suites(cls, value: List[str]) -> List[str]:
        unknown = [s for s in value if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites {unknown}; expected a subset of {list(SUITES)}")
        return value

    @field_validator("strategy")
    @classmethod
    def known_strategy(cls, value: str) -> str:
        if value not in STRATEGIES:
            raise ValueError(f"unknown annihilator strategy {value!r}")
        return value


class CommandConfig(BaseModel):
    """Validated CLI invocation; unknown keys are rejected"""
    model_config = ConfigDict(extra="forbid")

    subcommand: Literal["list", "info", "build", "check", "localize", "detq", "emit", "dims"]
    example: Optional[str] = None
    what: Literal["wba", "rform", "elements"] = "wba"
    r: Optional[int] = Field(default=None, ge=3)
    alpha: Optional[str] = Field(default=None, description="Rational value such as '2' or '-1/3'")
    cutoff: Optional[int] = Field(default=None, ge=0)
    strategy: Optional[str] = None
    bound: Optional[int] = Field(default=None, ge=0)
    suites: List[str] = Field(default_factory=list)
    at: List[str] = Field(default_factory=list, description="Named generators to localize at")
    params: Dict[str, str] = Field(default_factory=dict, description="Extra constructor parameters k=v")
    graph: Optional[str] = None
    input: Optional[str] = None
    output: str = "-"
    format: Literal["json", "text"] = "json"
    verbose: int = 0

    @field_validator("suites")
    @classmethod
    def known_suites(cls, value: List[str]) -> List[str]:
        unknown = [s for s in value if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites {', '.join(unknown)}")
        return value

    @field_validator("strategy")
    @classmethod
    def known_strategy(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in STRATEGIES:
            raise ValueError(f"unknown annihilator strategy {value!r}")
        return value
