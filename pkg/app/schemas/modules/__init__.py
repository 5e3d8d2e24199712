from app.schemas.modules.document import BasisDocument as BasisDocument
from app.schemas.modules.document import ElementDocument as ElementDocument
from app.schemas.modules.document import Module1DDocument as Module1DDocument
from app.schemas.modules.document import Module2DDocument as Module2DDocument
from app.schemas.modules.reports import ModuleBasis as ModuleBasis
from app.schemas.modules.reports import ModuleBetti as ModuleBetti
from app.schemas.modules.reports import ModuleBirthSet as ModuleBirthSet
from app.schemas.modules.reports import ModuleCheck as ModuleCheck
from app.schemas.modules.reports import ModuleRepresent as ModuleRepresent
from app.schemas.modules.reports import ModuleVerify as ModuleVerify
from app.schemas.modules.requests import BirthSetRequest as BirthSetRequest
from app.schemas.modules.requests import GenerateRequest as GenerateRequest
from app.schemas.modules.requests import ModuleRequest as ModuleRequest
from app.schemas.modules.requests import RepresentRequest as RepresentRequest
from app.schemas.modules.requests import VerifyRequest as VerifyRequest
