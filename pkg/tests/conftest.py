import json

import pytest
from schema import Or, Regex

from app.modules.codec import parse
from app.modules.posetcheck import ComponentKind, SupportComponent, SupportDescriptor


def module_1d(alpha: int, dims: list[int], maps: list[list[list]]) -> str:
    return json.dumps(
        {"index": "Z", "window": {"alpha": alpha, "beta": alpha + len(dims) - 1}, "dims": dims, "maps": maps},
    )


def module_2d(window: tuple[int, int, int, int], dims: list[list[int]], hmaps: dict, vmaps: dict) -> str:
    alpha, beta, gamma, delta = window
    return json.dumps(
        {
            "index": "Z2",
            "window": {"alpha": alpha, "beta": beta, "gamma": gamma, "delta": delta},
            "dims": dims,
            "hmaps": hmaps,
            "vmaps": vmaps,
        },
    )


@pytest.fixture
def len_greater_than_0():
    return lambda x: len(x) > 0


@pytest.fixture
def regex_rational():
    return Regex(r"^-?\d+(/\d+)?$")


@pytest.fixture
def degree_value():
    return Or(int, [int])


@pytest.fixture
def doc_122() -> str:
    return module_1d(0, [1, 2, 2], [[[1], [0]], [[1, 0], [0, 1]]])


@pytest.fixture
def doc_interval() -> str:
    return module_1d(0, [1, 1, 1], [[[1]], [[1]]])


@pytest.fixture
def doc_zero_map() -> str:
    return module_1d(0, [1, 1], [[[0]]])


@pytest.fixture
def doc_hook() -> str:
    return module_2d(
        (0, 1, 0, 1),
        [[0, 1], [1, 1]],
        {"0,0": [[]], "0,1": [[1]]},
        {"0,0": [[]], "1,0": [[1]]},
    )


@pytest.fixture
def doc_free_2x2() -> str:
    return module_2d(
        (0, 1, 0, 1),
        [[1, 1], [1, 1]],
        {"0,0": [[1]], "0,1": [["1/2"]]},
        {"0,0": [[1]], "1,0": [["1/2"]]},
    )


@pytest.fixture
def doc_not_commutative() -> str:
    return module_2d(
        (0, 1, 0, 1),
        [[1, 1], [1, 1]],
        {"0,0": [[1]], "0,1": [[1]]},
        {"0,0": [[1]], "1,0": [[2]]},
    )


@pytest.fixture
def doc_not_injective_2d() -> str:
    return module_2d(
        (0, 1, 0, 1),
        [[1, 1], [1, 1]],
        {"0,0": [[0]], "0,1": [[0]]},
        {"0,0": [[1]], "1,0": [[1]]},
    )


@pytest.fixture
def module_122(doc_122):
    return parse(doc_122)


@pytest.fixture
def module_interval(doc_interval):
    return parse(doc_interval)


@pytest.fixture
def module_hook(doc_hook):
    return parse(doc_hook)


@pytest.fixture
def module_free_2x2(doc_free_2x2):
    return parse(doc_free_2x2)


@pytest.fixture
def module_not_commutative(doc_not_commutative):
    return parse(doc_not_commutative)


@pytest.fixture
def punctured_staircase() -> SupportDescriptor:
    return SupportDescriptor((SupportComponent(ComponentKind.STAIRCASE_PUNCTURED, (0, 0)),))


@pytest.fixture
def single_principal() -> SupportDescriptor:
    return SupportDescriptor((SupportComponent(ComponentKind.PRINCIPAL, (1, 2)),))


@pytest.fixture
def incomparable_principals() -> SupportDescriptor:
    return SupportDescriptor(
        (
            SupportComponent(ComponentKind.PRINCIPAL, (0, 1)),
            SupportComponent(ComponentKind.PRINCIPAL, (1, 0)),
        ),
    )
