import pytest

from libwmc.errors import ConstantFormula, UnboundVariable
from libwmc.formula import (
        MonotoneDNF, components, degree_bound, max_degree,
        prime_implicants_of_size, restrict, units)
from libwmc.variables import VarId


X, Y, Z, W = (VarId.free(name) for name in 'XYZW')


def test_minimize() -> None:
    phi = MonotoneDNF([[X, Y], [X], [Y, Z], [X, Y, Z]])
    assert phi.terms == frozenset([frozenset([X]), frozenset([Y, Z])])
    assert phi == MonotoneDNF([[Z, Y], [X]])
    assert hash(phi) == hash(MonotoneDNF([[Z, Y], [X]]))


def test_constants() -> None:
    assert MonotoneDNF().is_false()
    assert MonotoneDNF([[X], []]).is_true()
    assert MonotoneDNF([[]]) == MonotoneDNF.true()
    assert str(MonotoneDNF.true()) == 'TRUE'
    assert str(MonotoneDNF.false()) == 'FALSE'


def test_evaluate() -> None:
    phi = MonotoneDNF([[X, Y], [Z]])
    assert phi.evaluate({X: True, Y: True, Z: False})
    assert not phi.evaluate({X: True, Y: False, Z: False})

    with pytest.raises(UnboundVariable):
        phi.evaluate({X: True})


def test_restrict() -> None:
    phi = MonotoneDNF([[X, Y], [Y, Z], [W]])
    assert restrict(phi, {Y: False}) == MonotoneDNF([[W]])
    assert restrict(phi, {Y: True}) == MonotoneDNF([[X], [Z], [W]])
    assert restrict(phi, {W: True}).is_true()
    assert restrict(phi, {W: False, Y: False}).is_false()
    assert restrict(phi, {VarId.r(1): True}) is phi


def test_restrict_minimizes() -> None:
    phi = MonotoneDNF([[X, Y], [X, Z, W]])
    assert restrict(phi, {Y: True}) == MonotoneDNF([[X]])


def test_units() -> None:
    phi = MonotoneDNF([[X], [Y, Z], [W]])
    assert units(phi) == frozenset([X, W])
    assert prime_implicants_of_size(phi, 2) == frozenset([frozenset([Y, Z])])

    with pytest.raises(ConstantFormula):
        units(MonotoneDNF.true())


def test_degree() -> None:
    phi = MonotoneDNF([[X, Y], [X, Z], [W]])
    assert degree_bound(phi, X) == 2
    assert degree_bound(phi, W) == 0
    assert max_degree(phi) == 2
    assert max_degree(MonotoneDNF.false()) == 0


def test_components() -> None:
    phi = MonotoneDNF([[X, Y], [Y, Z], [W]])
    parts = components(phi)
    assert parts == [MonotoneDNF([[W]]), MonotoneDNF([[X, Y], [Y, Z]])]

    with pytest.raises(ConstantFormula):
        components(MonotoneDNF.false())
