import pytest

from libwmc.errors import Unsupported
from libwmc.formula import MonotoneDNF
from libwmc.lineage import (
        CombinatorFn, CompositeLineage, f_w, flatten, ground_query, single)
from libwmc.oracle import brute_force_wmc
from libwmc.variables import VarId


X, Y, Z = (VarId.free(name) for name in 'XYZ')


def test_arity_check() -> None:
    with pytest.raises(ValueError):
        CompositeLineage(CombinatorFn.or_of(2), [MonotoneDNF([[X]])])


def test_residual() -> None:
    f = CombinatorFn.from_cnf(3, [[0, 1], [2]])
    psi = CompositeLineage(f, [
        MonotoneDNF([[X]]), MonotoneDNF.true(), MonotoneDNF([[Y]])])
    assert psi.fixed == {1: True}
    fn, live = psi.residual()
    assert live == (2,)
    assert fn == CombinatorFn.or_of(1)
    assert psi.live_arguments() == (MonotoneDNF([[Y]]),)
    assert psi.variables() == frozenset([Y])
    assert psi.constant_value() is None


def test_restrict_to_constant() -> None:
    psi = CompositeLineage(
            CombinatorFn.and_of(2), [MonotoneDNF([[X]]), MonotoneDNF([[Y]])])
    assert psi.restrict({X: False}).constant_value() is False
    assert psi.restrict({X: True, Y: True}).constant_value() is True
    assert psi.restrict({Z: True}) is psi


def test_cache_key() -> None:
    a = CompositeLineage(
            CombinatorFn.and_of(2), [MonotoneDNF([[X]]), MonotoneDNF([[Y]])])
    b = CompositeLineage(
            CombinatorFn.from_cnf(3, [[0], [1], [2]]),
            [MonotoneDNF([[X]]), MonotoneDNF([[Y]]), MonotoneDNF.true()])
    assert a == b
    assert hash(a) == hash(b)
    assert a != single(MonotoneDNF([[X, Y]]))


def test_evaluate() -> None:
    xor = CombinatorFn.from_hex(2, '6')
    psi = CompositeLineage(xor, [MonotoneDNF([[X]]), MonotoneDNF([[Y]])])
    assert psi.evaluate({X: True, Y: False})
    assert not psi.evaluate({X: True, Y: True})


def test_flatten() -> None:
    psi = ground_query(f_w(), 3, 2)
    phi = flatten(psi)
    assert brute_force_wmc(phi) == brute_force_wmc(psi)

    assert flatten(single(MonotoneDNF([[X]]))) == MonotoneDNF([[X]])

    xor = CombinatorFn.from_hex(2, '6')
    with pytest.raises(Unsupported):
        flatten(CompositeLineage(xor, [MonotoneDNF([[X]]), MonotoneDNF([[Y]])]))
