import json

import pytest

from app.exceptions import DegreeOutOfWindow, ParseError, ValidationError
from app.modules.codec import parse, parse_basis, parse_element, parse_support, serialize, serialize_basis
from app.modules.oracle import gen_free
from app.modules.pmod import DegreeElement, GradedBasis, Module1D, Module2D
from app.modules.posetcheck import ComponentKind
from app.settings import settings


def test_parse_1d(doc_122):
    m = parse(doc_122)

    assert isinstance(m, Module1D)
    assert m.dims == (1, 2, 2)
    assert m.map_at(0).shape == (2, 1)
    assert list(m.degrees()) == [0, 1, 2]


def test_parse_2d(doc_hook):
    m = parse(doc_hook)

    assert isinstance(m, Module2D)
    assert m.dim((0, 0)) == 0
    assert m.hmap((0, 0)).shape == (1, 0)
    assert list(m.degrees()) == [(0, 0), (0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("fixture", ["doc_122", "doc_interval", "doc_hook", "doc_free_2x2"])
def test_serialize_is_canonical(fixture, request):
    m = parse(request.getfixturevalue(fixture))
    data = serialize(m)

    assert data.endswith(b"\n")
    assert parse(data) == m
    assert serialize(parse(data)) == data


def test_serialize_normalizes_rationals():
    text = json.dumps({"index": "Z", "window": {"alpha": 0, "beta": 1}, "dims": [1, 1], "maps": [[["2/4"]]]})
    assert b'"1/2"' in serialize(parse(text))


def test_serialize_generated_fixtures():
    for seed in range(1, 6):
        m = gen_free(seed, (0, 2, 0, 2), {(0, 0): 1, (1, 1): 2})
        assert parse(serialize(m)) == m


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        json.dumps({"index": "Q", "window": {"alpha": 0, "beta": 0}, "dims": [1], "maps": []}),
        json.dumps({"index": "Z", "window": {"alpha": 0, "beta": 1}, "dims": [1, 1], "maps": [[["1/0"]]]}),
        json.dumps({"index": "Z", "window": {"alpha": 0, "beta": 1}, "dims": [1, 1], "maps": [[[0.5]]]}),
        json.dumps({"index": "Z", "window": {"alpha": 0, "beta": 0}, "dims": [-1], "maps": []}),
        json.dumps({"index": "Z", "window": {"alpha": 0}, "dims": [1], "maps": []}),
        json.dumps({"index": "Z", "window": {"alpha": 0, "beta": 0}, "dims": [1], "maps": [], "extra": 1}),
    ],
)
def test_parse_error(text):
    with pytest.raises(ParseError):
        parse(text)


@pytest.mark.parametrize("alias", ["00,0", "-0,0"])
def test_parse_rejects_aliased_map_keys(alias):
    text = json.dumps(
        {
            "index": "Z2",
            "window": {"alpha": 0, "beta": 1, "gamma": 0, "delta": 0},
            "dims": [[1], [1]],
            "hmaps": {"0,0": [[1]], alias: [[0]]},
            "vmaps": {},
        },
    )
    with pytest.raises(ParseError) as e:
        parse(text)
    assert alias in e.value.location


def test_parse_error_carries_location():
    text = json.dumps({"index": "Z", "window": {"alpha": 0, "beta": 1}, "dims": [1, 1], "maps": [[["x"]]]})
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.location.startswith("Z.maps.0")


@pytest.mark.parametrize(
    "document,message",
    [
        ({"index": "Z", "window": {"alpha": 0, "beta": 1}, "dims": [1, 2], "maps": [[[1]]]}, "A_0"),
        ({"index": "Z", "window": {"alpha": 0, "beta": 2}, "dims": [1, 1], "maps": [[[1]]]}, "dims"),
        ({"index": "Z", "window": {"alpha": 2, "beta": 1}, "dims": [], "maps": []}, "alpha"),
        (
            {
                "index": "Z2",
                "window": {"alpha": 0, "beta": 1, "gamma": 0, "delta": 0},
                "dims": [[1], [1]],
                "hmaps": {},
                "vmaps": {},
            },
            "hmaps",
        ),
        (
            {
                "index": "Z2",
                "window": {"alpha": 0, "beta": 1, "gamma": 0, "delta": 0},
                "dims": [[1], [1]],
                "hmaps": {"0,0": [[1, 1]]},
                "vmaps": {},
            },
            "hmaps",
        ),
        (
            {
                "index": "Z2",
                "window": {"alpha": 0, "beta": 0, "gamma": 0, "delta": 0},
                "dims": [[1]],
                "hmaps": {},
                "vmaps": {"0,0": [[1]]},
            },
            "0,0",
        ),
    ],
)
def test_validation_error(document, message):
    with pytest.raises(ValidationError) as e:
        parse(json.dumps(document))
    assert message in str(e.value)


def test_dimension_cap(monkeypatch):
    monkeypatch.setattr(settings, "MAX_DIM", 1)
    with pytest.raises(ValidationError):
        parse(json.dumps({"index": "Z", "window": {"alpha": 0, "beta": 0}, "dims": [2], "maps": []}))


def test_parse_element(module_122, module_hook):
    element = parse_element('{"degree": 1, "vector": ["1/2", 0]}', module_122)
    assert element.degree == 1
    assert element.vector[0] * 2 == 1

    assert parse_element('{"degree": [1, 1], "vector": [3]}', module_hook).degree == (1, 1)

    with pytest.raises(DegreeOutOfWindow):
        parse_element('{"degree": 5, "vector": [1]}', module_122)
    with pytest.raises(ValidationError):
        parse_element('{"degree": 1, "vector": [1]}', module_122)
    with pytest.raises(ValidationError):
        parse_element('{"degree": 1, "vector": [1]}', module_hook)


def test_parse_basis(module_122):
    basis = GradedBasis((DegreeElement(0, (1,)), DegreeElement(1, (0, 1))))
    data = serialize_basis(basis)

    assert parse_basis(data, module_122) == basis
    assert parse_basis(data) == basis

    with pytest.raises(ValidationError):
        parse_basis('{"elements": [{"degree": 0, "vector": [0]}]}', module_122)
    with pytest.raises(ParseError):
        parse_basis('{"elements": [{"degree": 0}]}', module_122)


def test_parse_support():
    descriptor = parse_support('{"components": [{"kind": "staircase_punctured", "corner": [0, 0]}]}')
    assert descriptor.components[0].kind is ComponentKind.STAIRCASE_PUNCTURED
    assert descriptor.components[0].corner == (0, 0)

    with pytest.raises(ParseError):
        parse_support('{"components": []}')
    with pytest.raises(ParseError):
        parse_support('{"components": [{"kind": "ring", "corner": [0, 0]}]}')
