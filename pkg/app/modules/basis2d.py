"""
Freeness test and basis extraction for Z^2-indexed modules.

Sufficient conditions for graded freeness over R[x, y] on a window: every unit square commutes, every stored map is
injective, and at every unit square the images of the horizontal and vertical maps into the top-right corner meet
exactly in the image of the diagonal composite. Under these conditions the new generators at each degree are a
complement of the sum of the incoming images.
"""

import logging
from typing import Optional

from app.modules.criteria import CellVerdict, CheckEnum, CriteriaReport
from app.modules.pmod import DegreeElement, GradedBasis, Module2D, incoming_maps, unit_vectors
from app.modules.ratmat import OperationCounter, complement_from_rref, hconcat, rank, rref

logger = logging.getLogger(__name__)


def _squares(m: Module2D) -> list[tuple[int, int]]:
    """Lower-left corners of the unit squares inside the window, row-major."""
    w = m.window
    return [(i, j) for i, j in m.degrees() if i < w.beta and j < w.delta]


def check_commutativity(m: Module2D) -> CriteriaReport:
    """
    Check `V(i+1,j) H(i,j) == H(i,j+1) V(i,j)` exactly on every unit square.

    Returns:
        CriteriaReport: One verdict per square, reported at its top-right corner.
    """
    verdicts = []
    for i, j in _squares(m):
        right_then_up = m.vmap((i + 1, j)) @ m.hmap((i, j))
        up_then_right = m.hmap((i, j + 1)) @ m.vmap((i, j))
        verdicts.append(CellVerdict(degree=(i + 1, j + 1), passed=right_then_up == up_then_right))
    return CriteriaReport(check=CheckEnum.COMMUTATIVITY, verdicts=tuple(verdicts))


def check_injectivity_2d(m: Module2D, counter: Optional[OperationCounter] = None) -> CriteriaReport:
    """
    Check that every stored horizontal and vertical map has rank equal to its source dimension.

    Returns:
        CriteriaReport: Verdicts at the source degree of each map; `observed` holds the rank.
    """
    verdicts = []
    for degree in m.degrees():
        for direction, maps in (("horizontal", m.hmaps), ("vertical", m.vmaps)):
            if degree not in maps:
                continue
            r = rank(maps[degree], counter)
            verdicts.append(
                CellVerdict(
                    degree=degree,
                    passed=r == m.dim(degree),
                    expected=m.dim(degree),
                    observed=r,
                    direction=direction,
                ),
            )
    return CriteriaReport(check=CheckEnum.INJECTIVITY, verdicts=tuple(verdicts))


def intersection_verdict(m: Module2D, degree: tuple[int, int], observed: int) -> CellVerdict:
    """
    Verdict of the intersection condition at an interior degree, given `rank(H | V)` into it.

    With injective maps, `dim(Im H ∩ Im V) = d(i-1,j) + d(i,j-1) - rank(H | V)`, and it must equal `d(i-1,j-1)`,
    the dimension of the diagonal image.
    """
    i, j = degree
    expected = m.dim((i - 1, j)) + m.dim((i, j - 1)) - m.dim((i - 1, j - 1))
    return CellVerdict(degree=degree, passed=observed == expected, expected=expected, observed=observed)


def _interior(m: Module2D, degree: tuple[int, int]) -> bool:
    """Whether `degree` has both a left and a lower neighbour in the window."""
    return degree[0] > m.window.alpha and degree[1] > m.window.gamma


def check_intersection_condition(m: Module2D, counter: Optional[OperationCounter] = None) -> CriteriaReport:
    """
    Check the unit-square intersection condition at every interior degree.

    The rank identity only encodes the intersection condition when the maps are injective and the squares commute;
    otherwise the report is marked unreliable.

    Returns:
        CriteriaReport: One verdict per interior degree.
    """
    reliable = check_commutativity(m).passed and check_injectivity_2d(m).passed
    verdicts = tuple(
        intersection_verdict(m, (i, j), rank(hconcat(m.hmap((i - 1, j)), m.vmap((i, j - 1))), counter))
        for i, j in m.degrees()
        if _interior(m, (i, j))
    )
    return CriteriaReport(check=CheckEnum.INTERSECTION, verdicts=verdicts, reliable=reliable)


def compute_basis_2d(m: Module2D, counter: Optional[OperationCounter] = None) -> GradedBasis:
    """
    Extract a homogeneous R[x, y]-basis.

    Runs commutativity, then injectivity, then the intersection condition, stopping at the first failure. Generators
    are then taken degree by degree in row-major order: every coordinate vector at the window minimum, a complement of
    the single incoming image on the bottom row and the left column, and a complement of `Im H + Im V` inside.

    Args:
        m (Module2D): The module.
        counter (OperationCounter, optional): Accumulates the row-reduction work.

    Returns:
        GradedBasis: Generators in row-major degree order.

    Raises:
        NotCommutativeAt: If a unit square does not commute.
        NotInjectiveAt: If a stored map is not injective.
        IntersectionFailAt: If the intersection condition fails at some interior degree.
    """
    check_commutativity(m).raise_on_failure()
    check_injectivity_2d(m, counter).raise_on_failure()

    reductions = {}
    intersection = []
    for degree in m.degrees():
        if degree == m.window.minimum:
            continue
        reductions[degree] = rref(incoming_maps(m, degree), counter)
        if _interior(m, degree):
            intersection.append(intersection_verdict(m, degree, reductions[degree].rank))
    CriteriaReport(check=CheckEnum.INTERSECTION, verdicts=tuple(intersection)).raise_on_failure()

    elements = [DegreeElement(m.window.minimum, vector) for vector in unit_vectors(m.dim(m.window.minimum))]
    for degree, result in reductions.items():
        complement = complement_from_rref(result, counter)
        elements.extend(DegreeElement(degree, column) for column in complement.columns())

    basis = GradedBasis(tuple(elements))
    logger.debug("Basis of %d generators: %s", len(basis), basis.counts())
    return basis
