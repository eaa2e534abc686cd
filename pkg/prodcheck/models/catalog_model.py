from enum import Enum
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .helper import Rational


class Tag(str, Enum):
    duality = "duality"
    braiding = "braiding"
    vpa = "vpa"
    vpa_derived = "vpa-derived"
    assoc_only = "assoc-only"
    ca = "ca"
    equivalence = "equivalence"
    closed_scalar = "closed-scalar"


class IdentityEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    lhs: str
    rhs: str
    ref: str = ""
    tags: frozenset[Tag]
    # pointwise entries name one variable per input strand, e.g. ("x", "y", "x")
    args: Optional[tuple[str, ...]] = None
    covers: frozenset[str] = frozenset()

    def swapped(self) -> "IdentityEntry":
        return self.model_copy(update={"lhs": self.rhs, "rhs": self.lhs})


class Catalog(BaseModel):
    entries: list[IdentityEntry]
    macros: dict[str, str] = Field(default_factory=dict)

    def get(self, entry_id: str) -> IdentityEntry:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        raise KeyError(entry_id)

    def tagged(self, tags: set[Tag]) -> list[IdentityEntry]:
        return [e for e in self.entries if e.tags & tags]

    def uncovered(self, topics: Iterable[str]) -> list[str]:
        """Topics no entry claims to cover."""
        claimed = set().union(*(e.covers for e in self.entries))
        return [t for t in topics if t not in claimed]


class VerdictStatus(str, Enum):
    passed = "pass"
    failed = "fail"
    skipped = "skipped"


class Witness(BaseModel):
    index: tuple[int, ...]
    lhs: str
    rhs: str

    def describe(self) -> str:
        return f"at {self.index}: lhs={self.lhs} rhs={self.rhs}"


class Verdict(BaseModel):
    id: str
    suite: str = ""
    status: VerdictStatus
    witness: Optional[Witness] = None
    detail: str = ""
    expected_failure: bool = False

    @model_validator(mode="after")
    def check_witness(self):
        if self.status is VerdictStatus.failed:
            if self.witness is None or self.witness.lhs == self.witness.rhs:
                raise ValueError("a failing verdict needs a witness with differing values")
        return self

    @property
    def counts_as_pass(self) -> bool:
        return self.status is VerdictStatus.passed or self.expected_failure


class DimensionCheck(BaseModel):
    quantity: str
    computed: Rational
    expected: Rational
    formula: str = ""

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


class DimensionReport(BaseModel):
    model: str
    kind: str
    d: Rational
    polynomial: str
    polynomial_value: Rational
    associative: Optional[bool] = None
    mickey: Optional[Rational] = None
    mounts: Optional[Rational] = None
    checks: list[DimensionCheck] = Field(default_factory=list)
    vector_part: Optional["DimensionReport"] = None


DimensionReport.model_rebuild()
