from typing import Optional

from app.schemas.base import PmodBaseModel, Rational
from app.schemas.modules.document import DegreeValue, ElementDocument


class CellVerdictReport(PmodBaseModel):
    """Verdict of one criterion at one degree."""

    degree: DegreeValue
    passed: bool
    expected: Optional[int] = None
    observed: Optional[int] = None
    direction: Optional[str] = None


class CriteriaCheckReport(PmodBaseModel):
    """Verdicts of one criterion over the window."""

    check: str
    passed: bool
    reliable: bool
    cells: list[CellVerdictReport]
    notes: list[str]


class ModuleCheck(PmodBaseModel):
    """Outcome of every criterion with the first failure, if any."""

    index: str
    passed: bool
    failure: Optional[str] = None
    checks: list[CriteriaCheckReport]


class DegreeCount(PmodBaseModel):
    """A count attached to a degree."""

    degree: DegreeValue
    count: int


class ModuleBasis(PmodBaseModel):
    """A computed basis with its generator counts and the work done."""

    index: str
    generators: int
    counts: list[DegreeCount]
    row_operations: int
    arith_operations: int
    elements: list[ElementDocument]


class ModuleBetti(PmodBaseModel):
    """Generators born at each degree and their total."""

    index: str
    table: list[DegreeCount]
    total: int


class ModuleVerify(PmodBaseModel):
    """Outcome of a degreewise basis check."""

    valid: bool
    degree: Optional[DegreeValue] = None
    reason: Optional[str] = None


class ModuleRepresent(PmodBaseModel):
    """Coefficients of an element over the basis elements below its degree."""

    degree: DegreeValue
    coefficients: list[Rational]
    elements: list[ElementDocument]


class ModuleBirthSet(PmodBaseModel):
    """Minimal birth degrees of an element."""

    degree: DegreeValue
    decomposable: bool
    minimals: list[DegreeValue]
