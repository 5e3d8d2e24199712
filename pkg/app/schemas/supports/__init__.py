from app.schemas.supports.classify import SupportClassify as SupportClassify
from app.schemas.supports.descriptor import ComponentDocument as ComponentDocument
from app.schemas.supports.descriptor import SupportDocument as SupportDocument
