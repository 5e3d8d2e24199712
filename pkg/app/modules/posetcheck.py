"""
Symbolic classification of indicator modules supported on upsets of Z^2.

A support is a finite union of components of three shapes, each an upset:

* `principal` at corner `(a, b)`: the quadrant `{p : p >= (a, b)}`;
* `staircase_closed` at `(a, b)`: `{p : p_x >= a or p_y >= b}`, the upset of the two translated negative axes;
* `staircase_punctured` at `(a, b)`: the closed staircase minus its boundary rays
  `{(t, b) : t <= a} ∪ {(a, t) : t <= b}`.

The module is the direct sum of the component indicator modules. Direct sums of indicator modules on upsets are
flat. A single principal quadrant gives a shifted free module. When some member of the support dominates no minimal
element, the module cannot be projective; staircases descend forever and have no minimal elements, so their
presence always produces such a member.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from app.exceptions import format_degree

Point = tuple[int, int]


class ComponentKind(str, Enum):
    """Shapes of support components."""

    PRINCIPAL = "principal"
    STAIRCASE_CLOSED = "staircase_closed"
    STAIRCASE_PUNCTURED = "staircase_punctured"


class Conclusion(str, Enum):
    """Overall verdict of the support classifier."""

    FREE = "FREE"
    NOT_PROJECTIVE_FLAT = "NOT_PROJECTIVE_FLAT"
    NO_CONCLUSION = "NO_CONCLUSION"


@dataclass(frozen=True)
class SupportComponent:
    """One component of an upset: a principal upset or a staircase anchored at `corner`."""

    kind: ComponentKind
    corner: Point

    def __contains__(self, p: Point) -> bool:
        """Membership of a lattice point in the component."""
        a, b = self.corner
        x, y = p
        if self.kind is ComponentKind.PRINCIPAL:
            return x >= a and y >= b
        in_closed = x >= a or y >= b
        if self.kind is ComponentKind.STAIRCASE_CLOSED:
            return in_closed
        on_rays = (y == b and x <= a) or (x == a and y <= b)
        return in_closed and not on_rays

    def has_member_strictly_below(self, c: Point) -> bool:
        """Whether some member `p` of this component satisfies `p <= c`, `p != c`."""
        a, b = self.corner
        if self.kind is ComponentKind.PRINCIPAL:
            return a <= c[0] and b <= c[1] and self.corner != c
        if self.kind is ComponentKind.STAIRCASE_CLOSED:
            return c[0] >= a or c[1] >= b
        return c[0] >= a + 1 or c[1] >= b + 1


@dataclass(frozen=True)
class SupportDescriptor:
    """A finite union of support components."""

    components: tuple[SupportComponent, ...]

    def __post_init__(self) -> None:
        """Freeze the components and reject an empty union."""
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("A support descriptor needs at least one component")

    @property
    def staircases(self) -> list[SupportComponent]:
        """Components that are staircases, closed or punctured."""
        return [c for c in self.components if c.kind is not ComponentKind.PRINCIPAL]


@dataclass(frozen=True)
class Verdict:
    """
    Classification of the indicator module of a support.

    Attributes:
        flat (bool): Always true for unions of upsets.
        free_by_construction (bool): The support is a single principal quadrant.
        not_projective (bool): Some member dominates no minimal element.
        witness (Point, optional): Such a member, when one exists.
        conclusion (Conclusion): `FREE`, `NOT_PROJECTIVE_FLAT` or `NO_CONCLUSION`.
        notes (tuple[str, ...]): Remarks on how the verdict was reached.
    """

    flat: bool
    free_by_construction: bool
    not_projective: bool
    witness: Optional[Point]
    conclusion: Conclusion
    notes: tuple[str, ...] = ()


def member(desc: SupportDescriptor, p: Point) -> bool:
    """Whether `p` lies in the support."""
    return any(p in component for component in desc.components)


def minimal_elements(desc: SupportDescriptor) -> list[Point]:
    """
    Minimal elements of the support, sorted.

    Only principal corners can be minimal; a corner is minimal when no component reaches strictly below it.
    """
    corners = {c.corner for c in desc.components if c.kind is ComponentKind.PRINCIPAL}
    return sorted(
        corner
        for corner in corners
        if not any(component.has_member_strictly_below(corner) for component in desc.components)
    )


def _witness(desc: SupportDescriptor, minimals: list[Point]) -> Optional[Point]:
    """A member lying on the first staircase, to the left of every minimal element."""
    if not desc.staircases:
        return None
    a, b = desc.staircases[0].corner
    x = min([a + 1] + [m[0] - 1 for m in minimals])
    return x, b + 1


def classify(desc: SupportDescriptor) -> Verdict:
    """
    Classify the indicator module of a support as free, flat-not-projective, or neither by these criteria.

    Returns:
        Verdict: The verdict; it never claims `FREE` together with non-projectivity.
    """
    minimals = minimal_elements(desc)
    witness = _witness(desc, minimals)
    free = len(desc.components) == 1 and desc.components[0].kind is ComponentKind.PRINCIPAL
    not_projective = witness is not None

    notes = ["every component is an upset, so the direct sum of indicator modules is flat"]
    if free:
        notes.append("a single principal quadrant is a free module on one generator at its corner")
    if not_projective:
        notes.append(f"{format_degree(witness)} is in the support and dominates no minimal element")
    if any(c.kind is ComponentKind.STAIRCASE_CLOSED for c in desc.components):
        notes.append(
            "closed staircases have no minimal elements either: non-projectivity here rests on the literal "
            "minimal-element criterion, which does not single out punctured staircases",
        )
    if not free and not not_projective:
        notes.append("every member dominates a minimal corner; projectivity is not decided by these criteria")

    if free:
        conclusion = Conclusion.FREE
    elif not_projective:
        conclusion = Conclusion.NOT_PROJECTIVE_FLAT
    else:
        conclusion = Conclusion.NO_CONCLUSION
    return Verdict(
        flat=True,
        free_by_construction=free,
        not_projective=not_projective,
        witness=witness,
        conclusion=conclusion,
        notes=tuple(notes),
    )
