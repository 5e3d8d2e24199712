"""
Brute-force ground truth computed straight from the definitions: decomposable subspaces, Betti counts, birth sets,
degreewise basis verification, unique representation, and seeded free-module fixtures.

Everything here uses rank tests only, independent of the extraction algorithms it is used to check.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from app.exceptions import BasisInvalid, Degree, DegreeOutOfWindow, ShapeMismatch, format_degree
from app.modules.pmod import (
    DegreeElement,
    GradedBasis,
    Module1D,
    Module2D,
    PersistenceModule,
    Window1D,
    Window2D,
    composite_map,
    degree_leq,
    incoming_maps,
    push_forward,
    validate_element,
)
from app.modules.ratmat import ZERO, Matrix, column_space_contains, hconcat, inverse, matmul, rank, solve

logger = logging.getLogger(__name__)

RANDOM_ENTRY_BOUND = 9


def decomposable_dim(m: PersistenceModule, degree: Degree) -> int:
    """
    Dimension of the sum of all images coming into `degree` from strictly smaller degrees.

    Raises:
        DegreeOutOfWindow: If the degree is outside the window.
    """
    return rank(incoming_maps(m, degree))


def betti(m: PersistenceModule, degree: Degree) -> int:
    """Number of generators born at `degree`: `d - dim D`."""
    return m.dim(degree) - decomposable_dim(m, degree)


def betti_table(m: PersistenceModule) -> dict[Degree, int]:
    """Betti counts for every window degree, in the module's degree order."""
    return {degree: betti(m, degree) for degree in m.degrees()}


def total_betti(m: PersistenceModule) -> int:
    """Total number of generators on the window."""
    return sum(betti_table(m).values())


def is_decomposable(m: PersistenceModule, x: DegreeElement) -> bool:
    """
    Whether `x` lies in the sum of incoming images at its degree.

    Raises:
        DegreeOutOfWindow: If the degree is outside the window.
        ValidationError: If the vector has the wrong length.
    """
    validate_element(m, x)
    return column_space_contains(incoming_maps(m, x.degree), x.vector)


def birth_set_minimals(m: PersistenceModule, x: DegreeElement) -> list[Degree]:
    """
    Minimal degrees `l <= deg(x)` in the window at which `x` has a preimage under the structure map.

    Returns:
        list[Degree]: The minimal elements of the birth set, sorted.
    """
    validate_element(m, x)
    births = [
        degree
        for degree in m.degrees()
        if degree_leq(degree, x.degree) and column_space_contains(composite_map(m, degree, x.degree), x.vector)
    ]
    return sorted(b for b in births if not any(c != b and degree_leq(c, b) for c in births))


@dataclass(frozen=True)
class VerificationResult:
    """
    Outcome of a degreewise basis check.

    Attributes:
        valid (bool): Whether the candidate is a basis on the window.
        degree (Degree, optional): First degree where it fails.
        reason (str): Why it fails there.
    """

    valid: bool
    degree: Optional[Degree] = None
    reason: str = ""

    def __bool__(self) -> bool:
        """A result is truthy exactly when the candidate is valid."""
        return self.valid


def check_basis(m: PersistenceModule, basis: GradedBasis) -> VerificationResult:
    """
    Check at every window degree that the images of all basis elements of lower or equal degree form a basis.

    The image matrix must be square (as many elements as the dimension) and invertible, which checks spanning and
    independence at once.

    Returns:
        VerificationResult: The verdict, with the first failing degree.
    """
    for element in basis:
        if element.degree not in m.window:
            return VerificationResult(False, element.degree, "element degree outside the window")
        if len(element.vector) != m.dim(element.degree):
            return VerificationResult(False, element.degree, "vector length differs from the dimension")
        if element.is_zero():
            return VerificationResult(False, element.degree, "zero vector")

    for degree in m.degrees():
        d = m.dim(degree)
        images = [push_forward(m, element, degree) for element in basis.below(degree)]
        if len(images) != d:
            return VerificationResult(False, degree, f"{len(images)} elements reach a space of dimension {d}")
        r = rank(Matrix.from_columns(images, d))
        if r < d:
            return VerificationResult(False, degree, f"images have rank {r} < {d}")
    return VerificationResult(True)


def verify_basis(m: PersistenceModule, basis: GradedBasis) -> bool:
    """Whether `basis` is a basis of `m` on the whole window."""
    return check_basis(m, basis).valid


def _images_at(m: PersistenceModule, basis: GradedBasis, degree: Degree) -> Matrix:
    """Columns pushing every basis element below `degree` forward to `degree`."""
    return Matrix.from_columns([push_forward(m, e, degree) for e in basis.below(degree)], m.dim(degree))


def represent(m: PersistenceModule, basis: GradedBasis, x: DegreeElement) -> list[Fraction]:
    """
    The unique coefficients writing `x` in terms of the shifted basis elements of degree at most `deg(x)`.

    Returns:
        list[Fraction]: One coefficient per element of `basis.below(x.degree)`, in basis order.

    Raises:
        BasisInvalid: If `basis` is not a basis of `m`.
    """
    validate_element(m, x)
    verification = check_basis(m, basis)
    if not verification:
        raise BasisInvalid(f"Not a basis at degree {format_degree(verification.degree)}: {verification.reason}")
    return solve(_images_at(m, basis, x.degree), x.vector)


def linear_combination(
    m: PersistenceModule,
    basis: GradedBasis,
    coefficients: Sequence[Fraction],
    degree: Degree,
) -> DegreeElement:
    """
    The element `sum c_j * (shifted e_j)` at `degree`, summing over `basis.below(degree)`.

    Raises:
        ShapeMismatch: If the number of coefficients differs from the number of elements below `degree`.
    """
    images = _images_at(m, basis, degree)
    if len(coefficients) != images.cols:
        raise ShapeMismatch(f"{len(coefficients)} coefficients for {images.cols} basis elements")
    if not images.cols:
        return DegreeElement(degree, (ZERO,) * m.dim(degree))
    return DegreeElement(degree, matmul(images, Matrix.from_columns([coefficients], len(coefficients))).column(0))


def rectangle_intersection_holds(m: Module2D, corner: tuple[int, int], r: int, s: int) -> bool:
    """
    Whether the images into the top-right corner of the `r x s` rectangle at `corner` meet exactly in the image of
    the diagonal composite.

    The horizontal image comes from `(i, j+s)`, the vertical from `(i+r, j)`; with `h`, `v` their ranks,
    `dim(Im H ∩ Im V) = h + v - rank(H | V)`, compared with the rank of the diagonal map from `corner`.

    Raises:
        DegreeOutOfWindow: If the rectangle leaves the window.
    """
    i, j = corner
    top_right = (i + r, j + s)
    horizontal = composite_map(m, (i, j + s), top_right)
    vertical = composite_map(m, (i + r, j), top_right)
    diagonal = composite_map(m, corner, top_right)
    meet = rank(horizontal) + rank(vertical) - rank(hconcat(horizontal, vertical))
    return meet == rank(diagonal)


def _random_invertible(rng: random.Random, n: int) -> Matrix:
    """A random invertible `n x n` matrix with small rational entries."""
    while True:
        candidate = Matrix(
            n,
            n,
            tuple(
                Fraction(rng.randint(-RANDOM_ENTRY_BOUND, RANDOM_ENTRY_BOUND), rng.randint(1, RANDOM_ENTRY_BOUND))
                for _ in range(n * n)
            ),
        )
        if rank(candidate) == n:
            return candidate


def _inclusion(source: list[Degree], target: list[Degree]) -> Matrix:
    """Coordinate inclusion sending generator `source[k]` to its position in `target`."""
    position = {g: q for q, g in enumerate(target)}
    return Matrix.from_columns(
        [tuple(Fraction(int(q == position[g])) for q in range(len(target))) for g in source],
        len(target),
    )


def gen_free(seed: int, window: Sequence[int], generators: dict[Degree, int]) -> PersistenceModule:
    """
    A seeded free module with generators at the given degrees, in random coordinates.

    Builds the literal free module (the piece at each degree has one coordinate per generator below it, maps are
    coordinate inclusions), then changes coordinates in every graded piece by a random invertible rational matrix with
    numerators in [-9, 9] and denominators in [1, 9].

    Args:
        seed (int): Seed of the pseudorandom generator; equal seeds give equal modules.
        window (Sequence[int]): `(alpha, beta)` for Z or `(alpha, beta, gamma, delta)` for Z^2.
        generators (dict[Degree, int]): Multiplicity of the generators at each degree.

    Returns:
        PersistenceModule: A module that passes every freeness check.

    Raises:
        DegreeOutOfWindow: If a generator lies outside the window.
    """
    rng = random.Random(seed)
    if len(window) == 2:
        w1 = Window1D(*window)
        degrees: list[Degree] = list(range(w1.alpha, w1.beta + 1))
        shape_window = w1
    else:
        w2 = Window2D(*window)
        degrees = [(i, j) for i in range(w2.alpha, w2.beta + 1) for j in range(w2.gamma, w2.delta + 1)]
        shape_window = w2
    for degree in generators:
        if degree not in shape_window:
            raise DegreeOutOfWindow(f"Generator degree {format_degree(degree)} is outside the window")

    labels = sorted(
        ((degree, k) for degree, multiplicity in generators.items() for k in range(multiplicity)),
        key=lambda label: (label[0] if isinstance(label[0], tuple) else (label[0],), label[1]),
    )
    pieces = {degree: [g for g in labels if degree_leq(g[0], degree)] for degree in degrees}
    change = {degree: _random_invertible(rng, len(pieces[degree])) for degree in degrees}

    def structure_map(source: Degree, target: Degree) -> Matrix:
        """Literal inclusion from `source` to `target` expressed in the random coordinates."""
        inclusion = _inclusion(pieces[source], pieces[target])
        return matmul(matmul(change[target], inclusion), inverse(change[source]))

    logger.debug("gen_free seed=%d window=%s generators=%s", seed, tuple(window), generators)
    if isinstance(shape_window, Window1D):
        return Module1D(
            window=shape_window,
            dims=tuple(len(pieces[d]) for d in degrees),
            maps=tuple(structure_map(d, d + 1) for d in degrees[:-1]),
        )
    w = shape_window
    return Module2D(
        window=w,
        dims=tuple(
            tuple(len(pieces[(i, j)]) for j in range(w.gamma, w.delta + 1)) for i in range(w.alpha, w.beta + 1)
        ),
        hmaps={(i, j): structure_map((i, j), (i + 1, j)) for i, j in degrees if i < w.beta},
        vmaps={(i, j): structure_map((i, j), (i, j + 1)) for i, j in degrees if j < w.delta},
    )
