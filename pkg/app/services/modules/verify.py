from dataclasses import dataclass, field
from typing import Optional

from app.modules.codec import parse_basis
from app.modules.oracle import VerificationResult, check_basis
from app.modules.pmod import GradedBasis
from app.schemas import modules as schemas
from app.services.base import PersistenceModuleBase, Text


@dataclass
class ModuleVerify(PersistenceModuleBase):
    """
    A class for checking a candidate basis degree by degree against a module.

    The basis document is parsed without checking it against the module, so a basis written for another module is
    reported as a failed verification rather than an input error.

    Args:
        document (Text): The module document.
        basis_document (Text): The candidate basis document.
    """

    basis_document: Text = None
    basis: Optional[GradedBasis] = field(default=None, init=False)

    def __post_init__(self) -> None:
        """Parse both documents."""
        super().__post_init__()
        self.basis = parse_basis(self.basis_document)

    def verify(self) -> VerificationResult:
        """Run the degreewise check of the candidate basis."""
        return check_basis(self.module, self.basis)

    def get_verification(self) -> dict:
        """
        Retrieve the verification verdict.

        Returns:
            dict: Whether the candidate is a basis, and the first failing degree with the reason otherwise.
        """
        result = self.verify()
        self.response["valid"] = result.valid
        self.response["degree"] = result.degree
        self.response["reason"] = result.reason or None
        return self.validated(schemas.ModuleVerify)
