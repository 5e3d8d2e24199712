from typing import Optional

from app.modules.posetcheck import Conclusion
from app.schemas.base import PmodBaseModel


class SupportClassify(PmodBaseModel):
    """Verdict of the support classifier."""

    flat: bool
    free_by_construction: bool
    not_projective: bool
    witness: Optional[tuple[int, int]] = None
    conclusion: Conclusion
    minimal_elements: list[tuple[int, int]]
    notes: list[str]
