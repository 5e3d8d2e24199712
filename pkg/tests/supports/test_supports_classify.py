import pytest

from app.modules.posetcheck import (
    ComponentKind,
    Conclusion,
    SupportComponent,
    SupportDescriptor,
    classify,
    member,
    minimal_elements,
)


def staircase(kind: ComponentKind, a: int, b: int) -> SupportDescriptor:
    return SupportDescriptor((SupportComponent(kind, (a, b)),))


def test_punctured_staircase(punctured_staircase):
    verdict = classify(punctured_staircase)

    assert verdict.flat
    assert verdict.not_projective
    assert not verdict.free_by_construction
    assert verdict.witness == (1, 1)
    assert verdict.conclusion is Conclusion.NOT_PROJECTIVE_FLAT


def test_single_principal(single_principal):
    verdict = classify(single_principal)

    assert verdict.conclusion is Conclusion.FREE
    assert verdict.free_by_construction
    assert not verdict.not_projective
    assert verdict.witness is None
    assert minimal_elements(single_principal) == [(1, 2)]


def test_incomparable_principals(incomparable_principals):
    verdict = classify(incomparable_principals)

    assert verdict.conclusion is Conclusion.NO_CONCLUSION
    assert verdict.flat
    assert not verdict.free_by_construction
    assert not verdict.not_projective
    assert minimal_elements(incomparable_principals) == [(0, 1), (1, 0)]


@pytest.mark.parametrize(
    "components",
    [
        [(ComponentKind.STAIRCASE_CLOSED, (0, 0))],
        [(ComponentKind.STAIRCASE_PUNCTURED, (2, -1))],
        [(ComponentKind.PRINCIPAL, (0, 0)), (ComponentKind.STAIRCASE_PUNCTURED, (3, 3))],
        [(ComponentKind.PRINCIPAL, (5, 5)), (ComponentKind.STAIRCASE_CLOSED, (1, 4))],
        [(ComponentKind.STAIRCASE_PUNCTURED, (0, 0)), (ComponentKind.STAIRCASE_CLOSED, (2, 2))],
    ],
)
def test_staircases_are_never_projective(components):
    descriptor = SupportDescriptor(tuple(SupportComponent(kind, corner) for kind, corner in components))
    verdict = classify(descriptor)

    assert verdict.flat
    assert verdict.not_projective
    assert verdict.conclusion is Conclusion.NOT_PROJECTIVE_FLAT
    assert member(descriptor, verdict.witness)
    assert not any(m[0] <= verdict.witness[0] and m[1] <= verdict.witness[1] for m in minimal_elements(descriptor))


def test_never_free_and_not_projective():
    for kind in ComponentKind:
        for corner in [(0, 0), (1, -2)]:
            verdict = classify(staircase(kind, *corner))
            assert not (verdict.free_by_construction and verdict.not_projective)


def test_membership():
    punctured = SupportComponent(ComponentKind.STAIRCASE_PUNCTURED, (0, 0))
    closed = SupportComponent(ComponentKind.STAIRCASE_CLOSED, (0, 0))
    principal = SupportComponent(ComponentKind.PRINCIPAL, (0, 0))

    assert (0, 0) in closed
    assert (0, 0) not in punctured
    assert (-5, 0) not in punctured
    assert (-5, 1) in punctured
    assert (1, -5) in punctured
    assert (-1, -1) not in closed
    assert (0, 0) in principal
    assert (-1, 3) not in principal


def test_components_are_upsets():
    for kind in ComponentKind:
        component = SupportComponent(kind, (1, 2))
        for x in range(-3, 5):
            for y in range(-3, 5):
                if (x, y) in component:
                    assert (x + 1, y) in component
                    assert (x, y + 1) in component


def test_principal_dominated_by_staircase_is_not_minimal():
    descriptor = SupportDescriptor(
        (
            SupportComponent(ComponentKind.PRINCIPAL, (1, 1)),
            SupportComponent(ComponentKind.STAIRCASE_CLOSED, (0, 0)),
        ),
    )
    assert minimal_elements(descriptor) == []


def test_empty_descriptor():
    with pytest.raises(ValueError):
        SupportDescriptor(())
