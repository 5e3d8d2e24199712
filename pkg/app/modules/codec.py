"""
Reading and writing module, basis and element documents.

Documents are UTF-8 JSON validated by the pydantic models in `app.schemas.modules.document`; every rational is
rendered canonically, so `parse(serialize(m)) == m` and serialization is byte-deterministic.
"""

import logging
from typing import Any, Optional, Union

import pydantic
from pydantic import TypeAdapter

from app.exceptions import ParseError, ShapeMismatch, ValidationError
from app.modules.pmod import (
    DegreeElement,
    GradedBasis,
    Module1D,
    Module2D,
    PersistenceModule,
    Window1D,
    Window2D,
    as_degree,
    validate_basis,
    validate_element,
)
from app.modules.posetcheck import SupportComponent, SupportDescriptor
from app.modules.ratmat import Matrix
from app.schemas.modules.document import (
    BasisDocument,
    ElementDocument,
    Module1DDocument,
    Module2DDocument,
    ModuleDocument,
)
from app.schemas.supports.descriptor import SupportDocument
from app.settings import settings
from app.utils.utils import parse_degree_key, parse_rational, render_degree_key, render_rational

logger = logging.getLogger(__name__)

_module_adapter: TypeAdapter = TypeAdapter(ModuleDocument)
_element_adapter: TypeAdapter = TypeAdapter(ElementDocument)
_basis_adapter: TypeAdapter = TypeAdapter(BasisDocument)
_support_adapter: TypeAdapter = TypeAdapter(SupportDocument)

Text = Union[str, bytes]


def _validate_document(adapter: TypeAdapter, text: Text) -> Any:
    """Validate JSON text against an adapter, mapping the first pydantic error to `ParseError`."""
    try:
        return adapter.validate_json(text)
    except pydantic.ValidationError as e:
        error = e.errors()[0]
        location = ".".join(str(part) for part in error["loc"]) or None
        raise ParseError(error["msg"], location) from e


def _to_matrix(rows: list[list[str]], source_dim: int, name: str) -> Matrix:
    """Canonical rationals to a matrix; `source_dim` gives the width of a matrix with no rows."""
    try:
        return Matrix.from_rows([[parse_rational(e) for e in row] for row in rows], cols=None if rows else source_dim)
    except ShapeMismatch as e:
        raise ValidationError(f"{name}: {e}") from e


def _from_matrix(a: Matrix) -> list[list[str]]:
    """Render a matrix as rows of canonical rational strings."""
    return [[render_rational(e) for e in a.row(i)] for i in range(a.rows)]


def check_dimension_cap(dims: list[int]) -> None:
    """
    Raises:
        ValidationError: If some dimension exceeds the configured `MAX_DIM`.
    """
    largest = max(dims, default=0)
    if largest > settings.MAX_DIM:
        raise ValidationError(f"Dimension {largest} exceeds the configured maximum {settings.MAX_DIM}")


def _module_from_document(document: Union[Module1DDocument, Module2DDocument]) -> PersistenceModule:
    """Build the module a validated document describes, checking every shape invariant."""
    if isinstance(document, Module1DDocument):
        window = Window1D(document.window.alpha, document.window.beta)
        check_dimension_cap(document.dims)
        if len(document.maps) != max(len(document.dims) - 1, 0):
            raise ValidationError(f"Expected {len(document.dims) - 1} maps, got {len(document.maps)}")
        maps = [
            _to_matrix(rows, document.dims[k], f"map A_{window.alpha + k}") for k, rows in enumerate(document.maps)
        ]
        return Module1D(window=window, dims=tuple(document.dims), maps=tuple(maps))

    w = document.window
    window = Window2D(w.alpha, w.beta, w.gamma, w.delta)
    check_dimension_cap([d for row in document.dims for d in row])

    def source_dim(degree: tuple[int, int]) -> int:
        """Dimension at a map's source degree; the key must lie in the window."""
        i, j = degree[0] - w.alpha, degree[1] - w.gamma
        if 0 <= i < len(document.dims) and 0 <= j < len(document.dims[i]):
            return document.dims[i][j]
        raise ValidationError(f"Map key {render_degree_key(degree)} lies outside the window")

    hmaps, vmaps = {}, {}
    for name, source, target in (("hmaps", document.hmaps, hmaps), ("vmaps", document.vmaps, vmaps)):
        for key, rows in source.items():
            degree = parse_degree_key(key)
            target[degree] = _to_matrix(rows, source_dim(degree), f"{name} at ({key})")
    return Module2D(window=window, dims=tuple(tuple(row) for row in document.dims), hmaps=hmaps, vmaps=vmaps)


def parse(text: Text) -> PersistenceModule:
    """
    Parse and validate a module document.

    Args:
        text (Text): The UTF-8 JSON document.

    Returns:
        PersistenceModule: A validated `Module1D` or `Module2D`.

    Raises:
        ParseError: If the document is malformed; the message carries the JSON location.
        ValidationError: If a shape invariant fails; the message names the offending index.
    """
    module = _module_from_document(_validate_document(_module_adapter, text))
    logger.debug("Parsed %s module on %s", type(module).__name__, module.window)
    return module


def module_to_document(m: PersistenceModule) -> Union[Module1DDocument, Module2DDocument]:
    """The pydantic document of a module, maps in canonical form and 2D keys sorted."""
    if isinstance(m, Module1D):
        document: Union[Module1DDocument, Module2DDocument] = Module1DDocument(
            index="Z",
            window={"alpha": m.window.alpha, "beta": m.window.beta},
            dims=list(m.dims),
            maps=[_from_matrix(a) for a in m.maps],
        )
    else:
        w = m.window
        document = Module2DDocument(
            index="Z2",
            window={"alpha": w.alpha, "beta": w.beta, "gamma": w.gamma, "delta": w.delta},
            dims=[list(row) for row in m.dims],
            hmaps={render_degree_key(k): _from_matrix(a) for k, a in sorted(m.hmaps.items())},
            vmaps={render_degree_key(k): _from_matrix(a) for k, a in sorted(m.vmaps.items())},
        )
    return document


def serialize(m: PersistenceModule) -> bytes:
    """
    Canonical byte rendering of a module.

    Args:
        m (PersistenceModule): A valid module.

    Returns:
        bytes: Compact JSON followed by a newline.
    """
    return (module_to_document(m).model_dump_json(by_alias=True) + "\n").encode()


def element_from_document(document: ElementDocument) -> DegreeElement:
    """Element from its document; the degree is not checked against any module."""
    return DegreeElement(
        degree=as_degree(document.degree),
        vector=tuple(parse_rational(e) for e in document.vector),
    )


def element_to_document(element: DegreeElement) -> ElementDocument:
    """Document of an element with canonical rational coordinates."""
    return ElementDocument(degree=element.degree, vector=[render_rational(e) for e in element.vector])


def parse_element(text: Text, m: PersistenceModule) -> DegreeElement:
    """
    Parse an element document and check it against the module.

    Raises:
        ParseError: If the document is malformed.
        DegreeOutOfWindow: If the degree is outside the window.
        ValidationError: If the vector has the wrong length.
    """
    element = element_from_document(_validate_document(_element_adapter, text))
    _check_degree_kind(m, element.degree)
    validate_element(m, element)
    return element


def parse_basis(text: Text, m: Optional[PersistenceModule] = None) -> GradedBasis:
    """
    Parse a basis document, checking it against the module when one is given.

    Raises:
        ParseError: If the document is malformed.
        DegreeOutOfWindow: If some degree is outside the window.
        ValidationError: If some vector has the wrong length or is zero.
    """
    document: BasisDocument = _validate_document(_basis_adapter, text)
    basis = GradedBasis(tuple(element_from_document(e) for e in document.elements))
    if m is not None:
        for element in basis:
            _check_degree_kind(m, element.degree)
        validate_basis(m, basis)
    return basis


def serialize_basis(basis: GradedBasis) -> bytes:
    """Canonical JSON bytes of a basis, newline terminated."""
    document = BasisDocument(elements=[element_to_document(e) for e in basis])
    return (document.model_dump_json(by_alias=True) + "\n").encode()


def _check_degree_kind(m: PersistenceModule, degree: Any) -> None:
    """Reject an integer degree for a Z^2 module and a pair for a Z module."""
    if isinstance(m, Module1D) != isinstance(degree, int):
        kind = "an integer" if isinstance(m, Module1D) else "a pair"
        raise ValidationError(f"Degree {degree!r} must be {kind} for this module")


def parse_support(text: Text) -> SupportDescriptor:
    """
    Parse a support descriptor document.

    Raises:
        ParseError: If the document is malformed or has no components.
    """
    document: SupportDocument = _validate_document(_support_adapter, text)
    return SupportDescriptor(
        tuple(SupportComponent(kind=c.kind, corner=tuple(c.corner)) for c in document.components),
    )
