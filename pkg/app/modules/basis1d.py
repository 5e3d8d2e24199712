"""
Freeness test and basis extraction for Z-indexed modules.

A module that vanishes below its window, has injective structure maps and stabilizes by isomorphisms past the
window is graded free over R[t]. Generators are read off degree by degree: at the window minimum every coordinate
vector, and at each later degree a complement of the image of the incoming map.
"""

import logging
from typing import Optional

from app.modules.criteria import CellVerdict, CheckEnum, CriteriaReport
from app.modules.pmod import DegreeElement, GradedBasis, Module1D, unit_vectors
from app.modules.ratmat import OperationCounter, complement_from_rref, rank, rref

logger = logging.getLogger(__name__)


def check_criteria_1d(m: Module1D, counter: Optional[OperationCounter] = None) -> CriteriaReport:
    """
    Check that every stored map `A_i` is injective, i.e. `rank(A_i) = d_i`.

    Vanishing below the window and stabilization above it hold by convention, so injectivity decides the verdict.
    A note is attached when the last stored map is not surjective: generators are then born at the window edge,
    and the module is assumed to stabilize from there on.

    Args:
        m (Module1D): The module.
        counter (OperationCounter, optional): Accumulates the row-reduction work.

    Returns:
        CriteriaReport: One verdict per stored map, at its source degree.
    """
    verdicts = []
    notes = []
    for i in range(m.window.alpha, m.window.beta):
        r = rank(m.map_at(i), counter)
        verdicts.append(CellVerdict(degree=i, passed=r == m.dim(i), expected=m.dim(i), observed=r))
        if i == m.window.beta - 1 and r < m.dim(i + 1):
            notes.append(
                f"A_{i} has rank {r} < d_{i + 1} = {m.dim(i + 1)}: new generators at the window edge {i + 1}; "
                "structure maps are taken to be isomorphisms from there on",
            )
    report = CriteriaReport(check=CheckEnum.INJECTIVITY, verdicts=tuple(verdicts), notes=tuple(notes))
    if not report.passed:
        logger.debug("Injectivity fails at degree %s", report.first_failure.degree)
    return report


def compute_basis_1d(m: Module1D, counter: Optional[OperationCounter] = None) -> GradedBasis:
    """
    Extract a homogeneous R[t]-basis.

    Args:
        m (Module1D): The module.
        counter (OperationCounter, optional): Accumulates the row-reduction work.

    Returns:
        GradedBasis: Generators in increasing degree.

    Raises:
        NotInjectiveAt: If some `A_i` is not injective; no partial basis is returned.
    """
    elements = [DegreeElement(m.window.alpha, vector) for vector in unit_vectors(m.dim(m.window.alpha))]
    for i in range(m.window.alpha, m.window.beta):
        result = rref(m.map_at(i), counter)
        if result.rank < m.dim(i):
            report = CriteriaReport(
                check=CheckEnum.INJECTIVITY,
                verdicts=(CellVerdict(degree=i, passed=False, expected=m.dim(i), observed=result.rank),),
            )
            report.raise_on_failure()
        complement = complement_from_rref(result, counter)
        elements.extend(DegreeElement(i + 1, column) for column in complement.columns())

    basis = GradedBasis(tuple(elements))
    logger.debug("Basis of %d generators: %s", len(basis), basis.counts())
    return basis
