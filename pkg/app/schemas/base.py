from typing import Annotated, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict
from pydantic.alias_generators import to_camel

from app.utils.utils import parse_rational, render_rational


def normalize_rational(value: Union[int, str]) -> str:
    """Validate a rational and store it in canonical `p/q` form."""
    return render_rational(parse_rational(value))


# Stored as the canonical string so documents re-serialize bit-exactly.
Rational = Annotated[str, BeforeValidator(normalize_rational)]

MatrixRows = list[list[Rational]]


class PmodBaseModel(BaseModel):
    """Base of every report: camelCase aliases, population by field name."""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True)


class PmodDocumentModel(PmodBaseModel):
    """Base of every input document; unknown keys are rejected."""

    model_config = ConfigDict(alias_generator=to_camel, populate_by_name=True, extra="forbid")
