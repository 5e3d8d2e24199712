import random

import pytest

from app.exceptions import NotInjectiveAt
from app.modules.basis1d import check_criteria_1d, compute_basis_1d
from app.modules.codec import parse
from app.modules.oracle import betti_table, gen_free, verify_basis
from app.modules.pmod import DegreeElement
from app.modules.ratmat import OperationCounter
from tests.conftest import module_1d


def random_generators_1d(rng: random.Random, alpha: int, beta: int, max_dim: int) -> dict[int, int]:
    generators: dict[int, int] = {}
    budget = rng.randint(1, max_dim)
    for _ in range(budget):
        degree = rng.randint(alpha, beta)
        generators[degree] = generators.get(degree, 0) + 1
    return generators


def test_compute_basis_1d_example(module_122):
    basis = compute_basis_1d(module_122)

    assert list(basis) == [DegreeElement(0, (1,)), DegreeElement(1, (0, 1))]
    assert basis.counts() == {0: 1, 1: 1}
    assert verify_basis(module_122, basis)


def test_compute_basis_1d_interval(module_interval):
    basis = compute_basis_1d(module_interval)
    assert len(basis) == 1
    assert basis.counts() == {0: 1}


def test_compute_basis_1d_zero_module():
    m = parse(module_1d(3, [0, 0, 0], [[], []]))
    assert len(compute_basis_1d(m)) == 0
    assert check_criteria_1d(m).passed


def test_compute_basis_1d_not_injective(doc_zero_map):
    m = parse(doc_zero_map)
    with pytest.raises(NotInjectiveAt) as e:
        compute_basis_1d(m)
    assert e.value.degree == 0
    assert str(e.value).startswith("NotInjectiveAt 0")


def test_check_criteria_1d_reports_first_failure():
    m = parse(module_1d(-1, [1, 1, 2, 1], [[[1]], [[1], [1]], [[0, 0]]]))
    report = check_criteria_1d(m)

    assert not report.passed
    assert [verdict.passed for verdict in report.verdicts] == [True, True, False]
    assert report.first_failure.degree == 1
    assert report.first_failure.observed == 0


def test_check_criteria_1d_edge_note(module_122):
    m = parse(module_1d(0, [1, 1, 2], [[[1]], [[1], [0]]]))
    assert check_criteria_1d(m).notes
    assert not check_criteria_1d(module_122).notes


def test_single_degree_window():
    m = parse(module_1d(4, [3], []))
    basis = compute_basis_1d(m)
    assert basis.counts() == {4: 3}


@pytest.mark.parametrize("seed", range(1, 201))
def test_compute_basis_1d_matches_oracle(seed):
    rng = random.Random(seed)
    alpha = rng.randint(-2, 2)
    beta = alpha + rng.randint(0, 5)
    generators = random_generators_1d(rng, alpha, beta, max_dim=5)
    m = gen_free(seed, (alpha, beta), generators)

    assert check_criteria_1d(m).passed
    basis = compute_basis_1d(m, OperationCounter())
    assert verify_basis(m, basis)

    table = betti_table(m)
    assert basis.counts() == {degree: count for degree, count in table.items() if count}
    assert basis.counts() == {degree: generators[degree] for degree in sorted(generators)}
    for i in m.degrees():
        assert m.dim(i) == sum(count for degree, count in table.items() if degree <= i)
