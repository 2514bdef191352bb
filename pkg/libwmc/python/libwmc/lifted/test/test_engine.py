from fractions import Fraction

import pytest

from libwmc.errors import NotMonotone, UnsafeQuery
from libwmc.experiment.runner import LIFTED_NODE_CONSTANT
from libwmc.lifted import (
        is_safe, lattice_of, lifted_evaluate, lifted_wmc)
from libwmc.lifted.engine import lifted_work_bound
from libwmc.lineage import CombinatorFn, f_w, ground_query
from libwmc.oracle import brute_force_wmc
from libwmc.variables import VarId
from libwmc.weights import WeightMap


def test_is_safe() -> None:
    assert is_safe(f_w())
    assert not is_safe(CombinatorFn.or_of(4))
    assert not is_safe(CombinatorFn.and_of(2))
    assert is_safe(CombinatorFn.constant(2, True))
    assert lattice_of(CombinatorFn.constant(2, False)) is None

    with pytest.raises(NotMonotone):
        is_safe(CombinatorFn.from_hex(2, '6'))


@pytest.mark.parametrize('n', [1, 2])
def test_matches_oracle(n) -> None:
    query = ground_query(f_w(), 3, n)
    assert lifted_wmc(f_w(), 3, n) == brute_force_wmc(query)

    w = WeightMap({VarId.r(1): '1/3', VarId.s(2, 1, 1): '1/5'}, '2/3')
    assert lifted_wmc(f_w(), 3, n, w) == brute_force_wmc(query, w)


def test_terms() -> None:
    result = lifted_evaluate(f_w(), 3, 2)
    assert result.lattice is not None
    assert len(result.terms) == 5
    assert sorted(t.coefficient for t in result.terms) == [-1, -1, 1, 1, 1]
    assert all(t.element != frozenset(range(4)) for t in result.terms)
    assert result.probability == sum(
            t.coefficient * t.probability for t in result.terms)
    assert result.total_nodes <= lifted_work_bound(len(result.lattice), 3, 2)


@pytest.mark.parametrize('n', range(1, 7))
def test_work_bound(n) -> None:
    result = lifted_evaluate(f_w(), 3, n)
    assert result.lattice is not None
    assert result.total_nodes <= lifted_work_bound(len(result.lattice), 3, n)
    assert result.total_nodes <= LIFTED_NODE_CONSTANT * n * n


def test_constant() -> None:
    assert lifted_wmc(CombinatorFn.constant(2, True), 1, 3) == 1
    assert lifted_wmc(CombinatorFn.constant(2, False), 1, 3) == Fraction(0)


def test_refused() -> None:
    with pytest.raises(UnsafeQuery):
        lifted_wmc(CombinatorFn.or_of(2), 1, 2)

    with pytest.raises(ValueError):
        lifted_wmc(f_w(), 2, 2)

    with pytest.raises(NotMonotone):
        lifted_wmc(CombinatorFn.from_hex(2, '6'), 1, 1)
