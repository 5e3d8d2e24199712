from pydantic import Field

from app.modules.posetcheck import ComponentKind
from app.schemas.base import PmodDocumentModel


class ComponentDocument(PmodDocumentModel):
    """One component: its kind and its corner."""

    kind: ComponentKind
    corner: tuple[int, int]


class SupportDocument(PmodDocumentModel):
    """A non-empty union of components."""

    components: list[ComponentDocument] = Field(min_length=1)
