from dataclasses import dataclass, field
from typing import Optional

from app.modules.codec import parse_support
from app.modules.posetcheck import SupportDescriptor, classify, minimal_elements
from app.schemas import supports as schemas
from app.services.base import PersistenceBase, Text


@dataclass
class SupportClassify(PersistenceBase):
    """
    A class for classifying the indicator module of an upset support.

    Args:
        document (Text): The support descriptor document.
    Attributes:
        descriptor (SupportDescriptor): The parsed descriptor.
    """

    document: Text = None
    descriptor: Optional[SupportDescriptor] = field(default=None, init=False)

    def __post_init__(self) -> None:
        """Parse the descriptor, raising on invalid input."""
        self.descriptor = parse_support(self.document)

    def get_classification(self) -> dict:
        """
        Retrieve the verdict record.

        Returns:
            dict: Flatness, freeness, non-projectivity with its witness, the conclusion, and the minimal elements.
        """
        verdict = classify(self.descriptor)
        self.response["flat"] = verdict.flat
        self.response["freeByConstruction"] = verdict.free_by_construction
        self.response["notProjective"] = verdict.not_projective
        self.response["witness"] = verdict.witness
        self.response["conclusion"] = verdict.conclusion
        self.response["minimalElements"] = minimal_elements(self.descriptor)
        self.response["notes"] = list(verdict.notes)
        return self.validated(schemas.SupportClassify)
