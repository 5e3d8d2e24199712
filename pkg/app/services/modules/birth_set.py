from dataclasses import dataclass, field
from typing import Optional

from app.modules.codec import parse_element
from app.modules.oracle import birth_set_minimals, is_decomposable
from app.modules.pmod import DegreeElement
from app.schemas import modules as schemas
from app.services.base import PersistenceModuleBase, Text


@dataclass
class ModuleBirthSet(PersistenceModuleBase):
    """
    A class for finding the minimal degrees at which an element is born.

    Args:
        document (Text): The module document.
        element_document (Text): The element document.
    """

    element_document: Text = None
    element: Optional[DegreeElement] = field(default=None, init=False)

    def __post_init__(self) -> None:
        """Parse the module and the element."""
        super().__post_init__()
        self.element = parse_element(self.element_document, self.module)

    def get_birth_set(self) -> dict:
        """
        Retrieve the minimal elements of the birth set.

        Returns:
            dict: The element degree, whether the element is decomposable there, and the sorted minimal degrees.
        """
        self.response["degree"] = self.element.degree
        self.response["decomposable"] = is_decomposable(self.module, self.element)
        self.response["minimals"] = birth_set_minimals(self.module, self.element)
        return self.validated(schemas.ModuleBirthSet)
