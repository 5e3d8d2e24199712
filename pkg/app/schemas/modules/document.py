from typing import Annotated, Literal, Union

from pydantic import Field, NonNegativeInt, StringConstraints

from app.schemas.base import MatrixRows, PmodDocumentModel, Rational
from app.utils.regex import REGEX_DEGREE_KEY

DegreeKey = Annotated[str, StringConstraints(pattern=REGEX_DEGREE_KEY)]
DegreeValue = Union[int, tuple[int, int]]


class Window1DDocument(PmodDocumentModel):
    """Bounds of a Z window, both included."""

    alpha: int
    beta: int


class Window2DDocument(PmodDocumentModel):
    """Bounds of a Z^2 window, all included."""

    alpha: int
    beta: int
    gamma: int
    delta: int


class Module1DDocument(PmodDocumentModel):
    """A module over Z: one dimension per window degree and the maps `A_i` between neighbours."""

    index: Literal["Z"]
    window: Window1DDocument
    dims: list[NonNegativeInt]
    maps: list[MatrixRows]


class Module2DDocument(PmodDocumentModel):
    """A module over Z^2: a dimension grid and horizontal and vertical maps keyed by their source degree."""

    index: Literal["Z2"]
    window: Window2DDocument
    dims: list[list[NonNegativeInt]]
    hmaps: dict[DegreeKey, MatrixRows]
    vmaps: dict[DegreeKey, MatrixRows]


ModuleDocument = Annotated[Union[Module1DDocument, Module2DDocument], Field(discriminator="index")]


class ElementDocument(PmodDocumentModel):
    """A homogeneous element, its degree and its coordinates."""

    degree: DegreeValue
    vector: list[Rational]


class BasisDocument(PmodDocumentModel):
    """An ordered list of homogeneous elements."""

    elements: list[ElementDocument]
