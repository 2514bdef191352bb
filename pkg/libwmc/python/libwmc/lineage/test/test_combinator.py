import numpy as np
import pytest

from libwmc.errors import FormatError
from libwmc.lineage import CombinatorFn, f_w, project_g_at_ones


def test_from_cnf() -> None:
    f = f_w()
    assert f.arity == 4
    assert f((True, False, False, True))
    assert not f((False, True, True, False))
    assert f.clauses == (
            frozenset([0, 2]), frozenset([0, 3]), frozenset([1, 3]))
    assert 'cnf: 0 2 | 0 3 | 1 3' in repr(f)

    with pytest.raises(FormatError):
        CombinatorFn.from_cnf(2, [[0, 2]])


def test_table_checks() -> None:
    with pytest.raises(FormatError):
        CombinatorFn(2, np.array([True, False]))

    with pytest.raises(FormatError):
        CombinatorFn(2, np.array([False, True, True, True]), [[0]])


def test_hex() -> None:
    xor = CombinatorFn.from_hex(2, '6')
    assert xor == CombinatorFn.from_function(2, lambda a: a[0] != a[1])
    assert xor.to_hex() == '6'
    assert CombinatorFn.and_of(3).to_hex() == '80'

    with pytest.raises(FormatError):
        CombinatorFn.from_hex(2, 'zz')
    with pytest.raises(FormatError):
        CombinatorFn.from_hex(2, '1ff')


def test_constant() -> None:
    assert CombinatorFn.constant(2, True).constant_value() is True
    assert CombinatorFn.constant(2, False).constant_value() is False
    assert CombinatorFn.or_of(2).constant_value() is None


def test_depends_on() -> None:
    f = CombinatorFn.from_function(3, lambda a: a[0] and a[2])
    depends, witness = f.depends_on(0)
    assert depends
    assert witness is not None
    assert witness[0] is False
    assert f(witness) != f((True,) + witness[1:])

    assert f.depends_on(1) == (False, None)
    assert f.dependent_arguments() == [0, 2]

    with pytest.raises(IndexError):
        f.depends_on(3)


def test_curry() -> None:
    f = f_w()
    g = f.curry(0, True)
    assert g == CombinatorFn.from_cnf(3, [[0, 2]])
    h = f.curry(3, False)
    assert h == CombinatorFn.from_cnf(3, [[0], [1]])


def test_negated_and_monotone() -> None:
    f = f_w()
    assert f.is_monotone()
    assert not f.negated().is_monotone()
    assert f.negated().negated() == f
    assert not CombinatorFn.from_hex(2, '6').is_monotone()


def test_prime_implicants() -> None:
    # (X0 v X2)(X0 v X3)(X1 v X3) = X0 X1 v X0 X3 v X2 X3
    assert sorted(sorted(c) for c in f_w().prime_implicants()) == [
            [0, 1], [0, 3], [2, 3]]
    assert CombinatorFn.constant(2, True).prime_implicants() == [frozenset()]
    assert CombinatorFn.constant(2, False).prime_implicants() == []


def test_project_g_at_ones() -> None:
    # k = 1, arity 5; g = X0 and (X1 or not b0)
    g = CombinatorFn.from_function(5, lambda a: a[0] and (a[1] or not a[2]))
    p = project_g_at_ones(g, 1)
    assert p == CombinatorFn.and_of(2)

    with pytest.raises(ValueError):
        project_g_at_ones(g, 2)
