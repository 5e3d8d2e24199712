from dataclasses import dataclass, field
from typing import Optional

from app.modules.codec import element_to_document, parse_basis, parse_element
from app.modules.oracle import represent
from app.modules.pmod import DegreeElement, GradedBasis
from app.schemas import modules as schemas
from app.services.base import PersistenceModuleBase, Text
from app.utils.utils import render_rational


@dataclass
class ModuleRepresent(PersistenceModuleBase):
    """
    A class for writing an element in terms of a verified basis.

    Args:
        document (Text): The module document.
        basis_document (Text): The basis document.
        element_document (Text): The element document.
    """

    basis_document: Text = None
    element_document: Text = None
    basis: Optional[GradedBasis] = field(default=None, init=False)
    element: Optional[DegreeElement] = field(default=None, init=False)

    def __post_init__(self) -> None:
        """Parse the module, then check the basis and the element against it."""
        super().__post_init__()
        self.basis = parse_basis(self.basis_document, self.module)
        self.element = parse_element(self.element_document, self.module)

    def get_representation(self) -> dict:
        """
        Retrieve the unique coefficients of the element.

        Returns:
            dict: One coefficient per basis element of degree at most the element's, with those elements.

        Raises:
            BasisInvalid: If the basis fails verification.
        """
        coefficients = represent(self.module, self.basis, self.element)
        self.response["degree"] = self.element.degree
        self.response["coefficients"] = [render_rational(c) for c in coefficients]
        self.response["elements"] = [element_to_document(e) for e in self.basis.below(self.element.degree)]
        return self.validated(schemas.ModuleRepresent)
