import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from app.exceptions import Degree, PmodError, UsageError
from app.modules.codec import check_dimension_cap, module_to_document, serialize
from app.modules.oracle import gen_free
from app.modules.pmod import PersistenceModule
from app.services.base import PersistenceBase
from app.utils.utils import parse_generators_flag, parse_window_flag

logger = logging.getLogger(__name__)


@dataclass
class ModuleGenerate(PersistenceBase):
    """
    A class for building a seeded free module fixture; equal arguments give byte-identical documents.

    Args:
        seed (int): Seed of the pseudorandom generator.
        window (Sequence[int]): `(alpha, beta)` or `(alpha, beta, gamma, delta)`.
        generators (dict[Degree, int]): Multiplicity of the generators at each degree.
    Attributes:
        module (PersistenceModule): The generated module.
    """

    seed: int = 0
    window: Sequence[int] = ()
    generators: dict[Degree, int] = field(default_factory=dict)
    module: Optional[PersistenceModule] = field(default=None, init=False)

    def __post_init__(self) -> None:
        """Check the arguments and build the module."""
        if len(self.window) not in (2, 4):
            raise UsageError(f"Window needs 2 or 4 bounds, got {len(self.window)}")
        two_dimensional = len(self.window) == 4
        for degree in self.generators:
            if isinstance(degree, tuple) != two_dimensional:
                raise UsageError(f"Generator degree {degree!r} does not match a {len(self.window) // 2}D window")
        try:
            # The top degree of the window carries every generator.
            check_dimension_cap([sum(self.generators.values())])
            self.module = gen_free(self.seed, self.window, self.generators)
        except PmodError as e:
            raise UsageError(str(e)) from e
        logger.debug("Generated fixture seed=%d with %d generators", self.seed, sum(self.generators.values()))

    @classmethod
    def from_flags(cls, seed: int, window: str, generators: str) -> "ModuleGenerate":
        """
        Build the fixture from the `--window a,b[,c,d]` and `--gens "(d1);(d2);..."` flag texts.

        Raises:
            UsageError: If a flag is malformed or a generator lies outside the window.
        """
        try:
            bounds = parse_window_flag(window)
            multiplicities = parse_generators_flag(generators)
        except ValueError as e:
            raise UsageError(str(e)) from e
        return cls(seed=seed, window=bounds, generators=multiplicities)

    def get_module_document(self) -> bytes:
        """The module as canonical JSON bytes."""
        return serialize(self.module)

    def get_module(self) -> dict:
        """
        Retrieve the generated module as a module document.

        Returns:
            dict: The document, in the same shape as the module files.
        """
        self.response = module_to_document(self.module).model_dump(by_alias=True, mode="json")
        return self.response
