from dataclasses import dataclass

from app.modules.oracle import betti_table
from app.schemas import modules as schemas
from app.services.base import PersistenceModuleBase


@dataclass
class ModuleBetti(PersistenceModuleBase):
    """
    A class for computing the number of generators born at every window degree, straight from the rank definition.

    Args:
        document (Text): The module document.
    """

    def get_betti(self) -> dict:
        """
        Retrieve the Betti table of the module.

        Returns:
            dict: One count per window degree in degree order, and their total.
        """
        table = betti_table(self.module)
        self.response["index"] = self.index
        self.response["table"] = [{"degree": degree, "count": count} for degree, count in table.items()]
        self.response["total"] = sum(table.values())
        return self.validated(schemas.ModuleBetti)
