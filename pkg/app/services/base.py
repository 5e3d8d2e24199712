from dataclasses import dataclass, field
from typing import Optional, Union

from app.modules.codec import parse
from app.modules.pmod import Module1D, PersistenceModule
from app.schemas.base import PmodBaseModel

Text = Union[str, bytes]


@dataclass
class PersistenceBase:
    """
    Base class of the services shared by the command line and the HTTP API.

    Attributes:
        response (dict): A dictionary to store the response data.
    """

    response: dict = field(default_factory=lambda: {}, init=False)

    def validated(self, schema: type[PmodBaseModel]) -> dict:
        """
        Validate the response against its report schema.

        Args:
            schema (type[PmodBaseModel]): The report model.

        Returns:
            dict: The report as JSON-ready data with camelCase keys.
        """
        return schema.model_validate(self.response).model_dump(by_alias=True, mode="json")


@dataclass
class PersistenceModuleBase(PersistenceBase):
    """
    Base class of the services that start from a module document.

    Args:
        document (Text): The module document.
    Attributes:
        module (PersistenceModule): The parsed and validated module.
    """

    document: Text = None
    module: Optional[PersistenceModule] = field(default=None, init=False)

    def __post_init__(self) -> None:
        """Parse the module document, raising on invalid input."""
        self.module = parse(self.document)

    @property
    def index(self) -> str:
        """`"Z"` or `"Z2"`, as in the module document."""
        return "Z" if isinstance(self.module, Module1D) else "Z2"
