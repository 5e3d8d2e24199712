from dataclasses import dataclass, field
from typing import Optional

from app.modules.basis1d import compute_basis_1d
from app.modules.basis2d import compute_basis_2d
from app.modules.codec import element_to_document, serialize_basis
from app.modules.pmod import GradedBasis, Module1D
from app.modules.ratmat import OperationCounter
from app.schemas import modules as schemas
from app.services.base import PersistenceModuleBase


@dataclass
class ModuleBasis(PersistenceModuleBase):
    """
    A class for extracting a homogeneous basis of a module that passes the freeness criteria.

    Args:
        document (Text): The module document.
    Attributes:
        basis (GradedBasis): The extracted basis, once computed.
        counter (OperationCounter): Row-reduction work spent on the extraction.
    """

    basis: Optional[GradedBasis] = field(default=None, init=False)
    counter: OperationCounter = field(default_factory=OperationCounter, init=False)

    def compute(self) -> GradedBasis:
        """
        Extract the basis once and cache it.

        Raises:
            CriteriaError: If the module fails a criterion; nothing is cached.
        """
        if self.basis is None:
            if isinstance(self.module, Module1D):
                self.basis = compute_basis_1d(self.module, self.counter)
            else:
                self.basis = compute_basis_2d(self.module, self.counter)
        return self.basis

    def get_basis_document(self) -> bytes:
        """The basis as canonical JSON bytes."""
        return serialize_basis(self.compute())

    def get_basis(self) -> dict:
        """
        Retrieve the basis with its per-degree generator counts and the work spent.

        Returns:
            dict: The basis report.
        """
        basis = self.compute()
        self.response["index"] = self.index
        self.response["generators"] = len(basis)
        self.response["counts"] = [{"degree": degree, "count": count} for degree, count in basis.counts().items()]
        self.response["rowOperations"] = self.counter.row_ops
        self.response["arithOperations"] = self.counter.arith_ops
        self.response["elements"] = [element_to_document(element) for element in basis]
        return self.validated(schemas.ModuleBasis)
