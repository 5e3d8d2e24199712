from fastapi import APIRouter

from app.schemas import supports as schemas
from app.services.supports.classify import SupportClassify

router = APIRouter()


@router.post("/classify", response_model=schemas.SupportClassify)
def classify_support(support: schemas.SupportDocument) -> dict:
    """Classify the indicator module of an upset support."""
    classifier = SupportClassify(document=support.model_dump_json(by_alias=True))
    classification = classifier.get_classification()
    return classification
