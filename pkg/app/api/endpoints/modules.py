from fastapi import APIRouter

from app.exceptions import Degree
from app.modules.pmod import as_degree
from app.schemas import modules as schemas
from app.services.modules.basis import ModuleBasis
from app.services.modules.betti import ModuleBetti
from app.services.modules.birth_set import ModuleBirthSet
from app.services.modules.check import ModuleCheck
from app.services.modules.generate import ModuleGenerate
from app.services.modules.represent import ModuleRepresent
from app.services.modules.verify import ModuleVerify

router = APIRouter()


def _dump(document) -> str:
    """Re-dump a validated request body as the JSON text the services parse."""
    return document.model_dump_json(by_alias=True)


@router.post("/check", response_model=schemas.ModuleCheck)
def check_module(module: schemas.ModuleRequest) -> dict:
    """Run the freeness criteria on a module and report every checked degree."""
    pmod = ModuleCheck(document=_dump(module))
    report = pmod.get_check()
    return report


@router.post("/basis", response_model=schemas.ModuleBasis)
def get_module_basis(module: schemas.ModuleRequest) -> dict:
    """Extract a homogeneous basis with generator counts and operation counts."""
    pmod = ModuleBasis(document=_dump(module))
    module_basis = pmod.get_basis()
    return module_basis


@router.post("/verify", response_model=schemas.ModuleVerify)
def verify_module_basis(request: schemas.VerifyRequest) -> dict:
    """Check degree by degree that a candidate is a basis of the module."""
    pmod = ModuleVerify(document=_dump(request.module), basis_document=_dump(request.basis))
    verification = pmod.get_verification()
    return verification


@router.post("/betti", response_model=schemas.ModuleBetti)
def get_module_betti(module: schemas.ModuleRequest) -> dict:
    """Number of generators born at each degree, computed from ranks only."""
    pmod = ModuleBetti(document=_dump(module))
    module_betti = pmod.get_betti()
    return module_betti


@router.post("/represent", response_model=schemas.ModuleRepresent)
def represent_element(request: schemas.RepresentRequest) -> dict:
    """Write an element in terms of a basis."""
    pmod = ModuleRepresent(
        document=_dump(request.module),
        basis_document=_dump(request.basis),
        element_document=_dump(request.element),
    )
    representation = pmod.get_representation()
    return representation


@router.post("/birth-set", response_model=schemas.ModuleBirthSet)
def get_birth_set(request: schemas.BirthSetRequest) -> dict:
    """Minimal degrees at which an element has a preimage."""
    pmod = ModuleBirthSet(document=_dump(request.module), element_document=_dump(request.element))
    birth_set = pmod.get_birth_set()
    return birth_set


@router.post("/generate")
def generate_module(request: schemas.GenerateRequest) -> dict:
    """Generate a seeded free module fixture."""
    generators: dict[Degree, int] = {}
    for generator in request.generators:
        degree = as_degree(generator.degree)
        generators[degree] = generators.get(degree, 0) + generator.multiplicity
    pmod = ModuleGenerate(seed=request.seed, window=tuple(request.window), generators=generators)
    module = pmod.get_module()
    return module
