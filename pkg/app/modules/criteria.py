"""Per-degree verdicts produced by the freeness checks."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from app.exceptions import CriteriaError, Degree, IntersectionFailAt, NotCommutativeAt, NotInjectiveAt


class CheckEnum(str, Enum):
    """The three freeness criteria."""

    INJECTIVITY = "injectivity"
    COMMUTATIVITY = "commutativity"
    INTERSECTION = "intersection"


@dataclass(frozen=True)
class CellVerdict:
    """
    Outcome of one check at one degree.

    Attributes:
        degree (Degree): Source degree for injectivity, target degree for the square checks.
        passed (bool): Whether the check holds.
        expected (int, optional): The required rank, when the check is a rank test.
        observed (int, optional): The measured rank, when the check is a rank test.
        direction (str, optional): `horizontal` or `vertical` for Z^2 injectivity.
    """

    degree: Degree
    passed: bool
    expected: Optional[int] = None
    observed: Optional[int] = None
    direction: Optional[str] = None

    def describe(self) -> str:
        """Human readable detail of the verdict, used in error messages."""
        parts = []
        if self.direction:
            parts.append(f"{self.direction} map")
        if self.expected is not None:
            parts.append(f"rank {self.observed}, expected {self.expected}")
        return "; ".join(parts)


@dataclass(frozen=True)
class CriteriaReport:
    """
    Verdicts of one check over the whole window, in the order the degrees were visited.

    Attributes:
        check (CheckEnum): Which check produced the verdicts.
        verdicts (tuple[CellVerdict, ...]): One verdict per checked map or square.
        reliable (bool): False when the check's preconditions failed, so its verdicts carry no guarantee.
        notes (tuple[str, ...]): Informational remarks that do not affect `passed`.
    """

    check: CheckEnum
    verdicts: tuple[CellVerdict, ...] = ()
    reliable: bool = True
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        """Whether every verdict passed."""
        return all(verdict.passed for verdict in self.verdicts)

    @property
    def first_failure(self) -> Optional[CellVerdict]:
        """The first failing verdict in degree order."""
        return next((verdict for verdict in self.verdicts if not verdict.passed), None)

    def as_error(self) -> Optional[CriteriaError]:
        """The error naming the first failing degree, or None when every verdict passed."""
        failure = self.first_failure
        if failure is None:
            return None
        if self.check is CheckEnum.INJECTIVITY:
            return NotInjectiveAt(failure.degree, failure.direction, f"rank {failure.observed} < {failure.expected}")
        if self.check is CheckEnum.COMMUTATIVITY:
            return NotCommutativeAt(failure.degree, "the two paths around the unit square differ")
        return IntersectionFailAt(failure.degree, failure.describe())

    def raise_on_failure(self) -> None:
        """
        Raises:
            CriteriaError: The error for the first failing verdict, if any.
        """
        error = self.as_error()
        if error is not None:
            raise error
