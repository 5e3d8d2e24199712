"""
Persistence modules indexed by Z and Z^2, stored on a finite closed window.

Outside the window the stored data is completed by convention: every graded piece below the window is zero, and
beyond the upper edge(s) the structure maps are isomorphisms. Dimensions live on the closed window, structure maps
on its interior edges.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Mapping, Sequence, Union

from app.exceptions import Degree, DegreeOutOfWindow, ValidationError, format_degree
from app.modules.ratmat import Matrix, hconcat, identity, matmul


@dataclass(frozen=True)
class Window1D:
    """Closed window `[alpha, beta]` of Z."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        """Reject an empty window."""
        if self.alpha > self.beta:
            raise ValidationError(f"Window alpha={self.alpha} exceeds beta={self.beta}")

    def __contains__(self, degree: object) -> bool:
        """Integer degrees between the bounds."""
        return isinstance(degree, int) and self.alpha <= degree <= self.beta

    def __len__(self) -> int:
        """Number of degrees in the window."""
        return self.beta - self.alpha + 1


@dataclass(frozen=True)
class Window2D:
    """Closed window `[alpha, beta] x [gamma, delta]` of Z^2."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self) -> None:
        """Reject a window with an empty side."""
        if self.alpha > self.beta or self.gamma > self.delta:
            raise ValidationError(
                f"Window [{self.alpha},{self.beta}]x[{self.gamma},{self.delta}] has an empty side",
            )

    def __contains__(self, degree: object) -> bool:
        """Pairs of integers inside the rectangle."""
        return (
            isinstance(degree, tuple)
            and len(degree) == 2
            and self.alpha <= degree[0] <= self.beta
            and self.gamma <= degree[1] <= self.delta
        )

    def __len__(self) -> int:
        """Number of degrees in the window."""
        return (self.beta - self.alpha + 1) * (self.delta - self.gamma + 1)

    @property
    def minimum(self) -> tuple[int, int]:
        """The least degree of the window."""
        return self.alpha, self.gamma


@dataclass(frozen=True)
class Module1D:
    """
    A Z-indexed persistence module: dimensions `d_i` for `i` in `[alpha, beta]` and maps `A_i: M_i -> M_{i+1}`
    for `i` in `[alpha, beta - 1]`, `A_i` of shape `d_{i+1} x d_i`.
    """

    window: Window1D
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        """Freeze the sequences and check dims and map shapes against the window."""
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.dims) != len(self.window):
            raise ValidationError(f"Expected {len(self.window)} dims for the window, got {len(self.dims)}")
        for offset, d in enumerate(self.dims):
            if d < 0:
                raise ValidationError(f"Negative dimension at degree {self.window.alpha + offset}")
        if len(self.maps) != len(self.dims) - 1:
            raise ValidationError(f"Expected {len(self.dims) - 1} maps, got {len(self.maps)}")
        for offset, a in enumerate(self.maps):
            expected = (self.dims[offset + 1], self.dims[offset])
            if a.shape != expected:
                raise ValidationError(
                    f"Map A_{self.window.alpha + offset} has shape {a.rows}x{a.cols}, "
                    f"expected {expected[0]}x{expected[1]}",
                )

    def degrees(self) -> Iterator[int]:
        """Window degrees in increasing order."""
        return iter(range(self.window.alpha, self.window.beta + 1))

    def dim(self, degree: int) -> int:
        """Dimension of the graded piece at `degree`."""
        self.require(degree)
        return self.dims[degree - self.window.alpha]

    def map_at(self, degree: int) -> Matrix:
        """The stored map `A_degree: M_degree -> M_{degree+1}`."""
        if degree not in self.window or degree == self.window.beta:
            raise DegreeOutOfWindow(f"No stored map out of degree {degree}")
        return self.maps[degree - self.window.alpha]

    def require(self, degree: Degree) -> None:
        """Raise `DegreeOutOfWindow` unless `degree` lies in the window."""
        if degree not in self.window:
            w = self.window
            raise DegreeOutOfWindow(f"Degree {format_degree(degree)} is outside [{w.alpha},{w.beta}]")


@dataclass(frozen=True)
class Module2D:
    """
    A Z^2-indexed persistence module on the rectangle `[alpha, beta] x [gamma, delta]`.

    `hmaps[(i, j)]` is the horizontal map `M_{i,j} -> M_{i+1,j}` (for `i < beta`) and `vmaps[(i, j)]` the vertical
    map `M_{i,j} -> M_{i,j+1}` (for `j < delta`). `dims[i - alpha][j - gamma]` is `d_{i,j}`.
    """

    window: Window2D
    dims: tuple[tuple[int, ...], ...]
    hmaps: Mapping[tuple[int, int], Matrix] = field(hash=False)
    vmaps: Mapping[tuple[int, int], Matrix] = field(hash=False)

    def __post_init__(self) -> None:
        """Freeze the grids and check dims and both map families against the window."""
        w = self.window
        object.__setattr__(self, "dims", tuple(tuple(row) for row in self.dims))
        object.__setattr__(self, "hmaps", dict(self.hmaps))
        object.__setattr__(self, "vmaps", dict(self.vmaps))
        if len(self.dims) != w.beta - w.alpha + 1 or any(len(row) != w.delta - w.gamma + 1 for row in self.dims):
            raise ValidationError(
                f"dims must be a {w.beta - w.alpha + 1}x{w.delta - w.gamma + 1} grid for the window",
            )
        for i, j in self.degrees():
            if self.dim((i, j)) < 0:
                raise ValidationError(f"Negative dimension at degree ({i},{j})")
        self.__check_maps(self.hmaps, "hmaps", (1, 0))
        self.__check_maps(self.vmaps, "vmaps", (0, 1))

    def __check_maps(self, maps: Mapping[tuple[int, int], Matrix], name: str, step: tuple[int, int]) -> None:
        """Keys of `maps` must be exactly the degrees whose `step` neighbour is in the window, with matching shapes."""
        expected_keys = {(i, j) for i, j in self.degrees() if (i + step[0], j + step[1]) in self.window}
        missing = sorted(expected_keys - set(maps))
        extra = sorted(set(maps) - expected_keys)
        if missing:
            raise ValidationError(f"{name} is missing the map at {format_degree(missing[0])}")
        if extra:
            raise ValidationError(f"{name} has a map at {format_degree(extra[0])} outside the window interior")
        for (i, j), a in sorted(maps.items()):
            expected = (self.dim((i + step[0], j + step[1])), self.dim((i, j)))
            if a.shape != expected:
                raise ValidationError(
                    f"{name} at ({i},{j}) has shape {a.rows}x{a.cols}, expected {expected[0]}x{expected[1]}",
                )

    def degrees(self) -> Iterator[tuple[int, int]]:
        """Window degrees in row-major order: `i` outer, `j` inner."""
        w = self.window
        return iter(product(range(w.alpha, w.beta + 1), range(w.gamma, w.delta + 1)))

    def dim(self, degree: tuple[int, int]) -> int:
        """Dimension of the graded piece at `degree`."""
        self.require(degree)
        return self.dims[degree[0] - self.window.alpha][degree[1] - self.window.gamma]

    def hmap(self, degree: tuple[int, int]) -> Matrix:
        """Horizontal map out of `degree`."""
        if degree not in self.hmaps:
            raise DegreeOutOfWindow(f"No stored horizontal map out of {format_degree(degree)}")
        return self.hmaps[degree]

    def vmap(self, degree: tuple[int, int]) -> Matrix:
        """Vertical map out of `degree`."""
        if degree not in self.vmaps:
            raise DegreeOutOfWindow(f"No stored vertical map out of {format_degree(degree)}")
        return self.vmaps[degree]

    def require(self, degree: Degree) -> None:
        """Raise `DegreeOutOfWindow` unless `degree` lies in the window."""
        if degree not in self.window:
            w = self.window
            raise DegreeOutOfWindow(
                f"Degree {format_degree(degree)} is outside [{w.alpha},{w.beta}]x[{w.gamma},{w.delta}]",
            )


PersistenceModule = Union[Module1D, Module2D]


@dataclass(frozen=True)
class DegreeElement:
    """A homogeneous element: a coordinate vector in the graded piece at `degree`."""

    degree: Degree
    vector: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        """Coerce coordinates to fractions and list degrees to pairs."""
        object.__setattr__(self, "vector", tuple(Fraction(e) for e in self.vector))
        if isinstance(self.degree, list):
            object.__setattr__(self, "degree", tuple(self.degree))

    def is_zero(self) -> bool:
        """Whether every coordinate vanishes."""
        return not any(self.vector)


@dataclass(frozen=True)
class GradedBasis:
    """Ordered homogeneous elements proposed or computed as a basis."""

    elements: tuple[DegreeElement, ...] = ()

    def __post_init__(self) -> None:
        """Freeze the elements."""
        object.__setattr__(self, "elements", tuple(self.elements))

    def __len__(self) -> int:
        """Number of elements."""
        return len(self.elements)

    def __iter__(self) -> Iterator[DegreeElement]:
        """Elements in basis order."""
        return iter(self.elements)

    def counts(self) -> dict[Degree, int]:
        """Number of elements per degree, in order of first appearance."""
        result: dict[Degree, int] = {}
        for element in self.elements:
            result[element.degree] = result.get(element.degree, 0) + 1
        return result

    def below(self, degree: Degree) -> list[DegreeElement]:
        """Elements whose degree is less than or equal to `degree`, in basis order."""
        return [element for element in self.elements if degree_leq(element.degree, degree)]


def degree_leq(a: Degree, b: Degree) -> bool:
    """Product order on Z or Z^2."""
    if isinstance(a, tuple) and isinstance(b, tuple):
        return a[0] <= b[0] and a[1] <= b[1]
    if isinstance(a, int) and isinstance(b, int):
        return a <= b
    return False


def composite_map(m: PersistenceModule, source: Degree, target: Degree) -> Matrix:
    """
    The structure map `M_source -> M_target` as a matrix product of stored maps.

    For Z^2 the path goes right along the source row, then up along the target column; on commutative modules every
    monotone path gives the same product.

    Raises:
        DegreeOutOfWindow: If either degree is outside the window or `source` is not below `target`.
    """
    m.require(source)
    m.require(target)
    if not degree_leq(source, target):
        raise DegreeOutOfWindow(f"{format_degree(source)} is not below {format_degree(target)}")
    result = identity(m.dim(source))
    if isinstance(m, Module1D):
        for i in range(source, target):
            result = matmul(m.map_at(i), result)
        return result
    (i0, j0), (i1, j1) = source, target
    for i in range(i0, i1):
        result = matmul(m.hmap((i, j0)), result)
    for j in range(j0, j1):
        result = matmul(m.vmap((i1, j)), result)
    return result


def push_forward(m: PersistenceModule, element: DegreeElement, target: Degree) -> tuple[Fraction, ...]:
    """
    Image of an element under the structure map to `target`, applying the stored maps to the vector one at a time.

    Raises:
        DegreeOutOfWindow: If `target` is outside the window or not above the element's degree.
    """
    m.require(target)
    if not degree_leq(element.degree, target):
        raise DegreeOutOfWindow(f"{format_degree(element.degree)} is not below {format_degree(target)}")
    column = Matrix.from_columns([element.vector], len(element.vector))
    if isinstance(m, Module1D):
        steps = [m.map_at(i) for i in range(element.degree, target)]
    else:
        (i0, j0), (i1, j1) = element.degree, target
        steps = [m.hmap((i, j0)) for i in range(i0, i1)] + [m.vmap((i1, j)) for j in range(j0, j1)]
    for step in steps:
        column = matmul(step, column)
    return column.column(0)


def incoming_maps(m: PersistenceModule, degree: Degree) -> Matrix:
    """
    The concatenation of all unit-step structure maps into `degree`; its column space is the decomposable subspace.

    At the window minimum there are no incoming maps and the result is `d x 0`.
    """
    m.require(degree)
    if isinstance(m, Module1D):
        if degree == m.window.alpha:
            return Matrix.zeros(m.dim(degree), 0)
        return m.map_at(degree - 1)
    i, j = degree
    result = Matrix.zeros(m.dim(degree), 0)
    if i > m.window.alpha:
        result = hconcat(result, m.hmap((i - 1, j)))
    if j > m.window.gamma:
        result = hconcat(result, m.vmap((i, j - 1)))
    return result


def validate_element(m: PersistenceModule, element: DegreeElement) -> None:
    """
    Raises:
        DegreeOutOfWindow: If the degree is outside the window.
        ValidationError: If the vector length is not the dimension at the degree.
    """
    m.require(element.degree)
    expected = m.dim(element.degree)
    if len(element.vector) != expected:
        raise ValidationError(
            f"Vector at degree {format_degree(element.degree)} has length {len(element.vector)}, expected {expected}",
        )


def validate_basis(m: PersistenceModule, basis: GradedBasis) -> None:
    """
    Raises:
        DegreeOutOfWindow: If some element lies outside the window.
        ValidationError: If some vector has the wrong length or is zero.
    """
    for index, element in enumerate(basis):
        validate_element(m, element)
        if element.is_zero():
            raise ValidationError(f"Basis element {index} at degree {format_degree(element.degree)} is zero")


def unit_vectors(n: int) -> list[tuple[Fraction, ...]]:
    """Coordinate vectors of an n-dimensional space, in order."""
    return [tuple(Fraction(int(i == k)) for i in range(n)) for k in range(n)]


def as_degree(value: Union[int, Sequence[int]]) -> Degree:
    """Normalize a degree coming from a document: an int for Z, a pair for Z^2."""
    if isinstance(value, int):
        return value
    return int(value[0]), int(value[1])
