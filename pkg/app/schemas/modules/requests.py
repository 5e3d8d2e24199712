from pydantic import Field, PositiveInt, RootModel

from app.schemas.base import PmodDocumentModel
from app.schemas.modules.document import BasisDocument, DegreeValue, ElementDocument, ModuleDocument


class ModuleRequest(RootModel[ModuleDocument]):
    """A module document of either index."""


class VerifyRequest(PmodDocumentModel):
    """A module and a candidate basis."""

    module: ModuleDocument
    basis: BasisDocument


class RepresentRequest(PmodDocumentModel):
    """A module, a basis and an element to represent."""

    module: ModuleDocument
    basis: BasisDocument
    element: ElementDocument


class BirthSetRequest(PmodDocumentModel):
    """A module and an element."""

    module: ModuleDocument
    element: ElementDocument


class GeneratorDocument(PmodDocumentModel):
    """A generator degree and how many generators sit there."""

    degree: DegreeValue
    multiplicity: PositiveInt = 1


class GenerateRequest(PmodDocumentModel):
    """Seed, window bounds and generators of a free fixture."""

    seed: int
    window: list[int] = Field(min_length=2, max_length=4)
    generators: list[GeneratorDocument]
