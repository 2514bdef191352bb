import numpy as np
import pytest

from libwmc.compiler import compile
from libwmc.diagrams import DiagramBuilder
from libwmc.errors import InvalidDiagram, Unsupported
from libwmc.formula import MonotoneDNF, max_degree
from libwmc.lineage import ground_hk_family, single
from libwmc.transforms.unit_rule import (
        follows_unit_rule, node_residuals, to_unit_rule, unit_ledger,
        unit_rule_size_bound)
from libwmc.variables import VarId


X, Y, Z = (VarId.free(name) for name in 'XYZ')


@pytest.fixture
def y_first():
    """An FBDD for X v YZ that tests Y before the unit X."""
    b = DiagramBuilder(1)
    f, t = b.constant(False), b.constant(True)
    x = b.decision(X, f, t)
    z = b.decision(Z, x, t)
    root = b.decision(Y, x, z)
    return b.build(root, [X, Y, Z])


def test_violation(y_first) -> None:
    phi = MonotoneDNF([[X], [Y, Z]])
    assert node_residuals(y_first, phi)[y_first.root] == phi
    assert not follows_unit_rule(y_first, phi)

    ledger = unit_ledger(y_first, phi)
    assert frozenset([Z]) in ledger.values()


def test_rewrite(y_first, computes) -> None:
    phi = MonotoneDNF([[X], [Y, Z]])
    g = to_unit_rule(y_first, phi)
    assert follows_unit_rule(g, phi)
    assert len(g) <= unit_rule_size_bound(phi, len(y_first))
    assert computes(g, phi, [X, Y, Z])
    assert g.nodes[g.root].var == X


def test_size_bound() -> None:
    phi = MonotoneDNF([[X], [Y, Z]])
    assert unit_rule_size_bound(phi, 5) == 2 * 5 + 1 + 2
    assert unit_rule_size_bound(MonotoneDNF([[X, Y], [Y, Z]]), 4) == 3 * 4 + 2


def _random_two_dnf(seed: int) -> MonotoneDNF:
    rng = np.random.default_rng(seed)
    size = int(rng.integers(4, 11))
    names = [VarId.free('x{}'.format(i)) for i in range(size)]
    count = min(int(rng.integers(size, 2 * size + 1)), size * (size - 1) // 2)
    pairs = set()
    while len(pairs) < count:
        i, j = sorted(rng.choice(size, size=2, replace=False))
        pairs.add((i, j))
    return MonotoneDNF([names[i], names[j]] for i, j in pairs)


@pytest.mark.parametrize('seed', range(200))
def test_random_two_dnf(seed, compile_fbdd, computes) -> None:
    phi = _random_two_dnf(seed)
    f = compile_fbdd(phi)
    g = to_unit_rule(f, phi)
    assert follows_unit_rule(g, phi)
    assert len(g) <= max_degree(phi) * len(f)
    assert len(g) <= unit_rule_size_bound(phi, len(f))
    assert computes(g, phi, sorted(phi.variables()))


def test_random_with_unit(compile_fbdd, computes) -> None:
    phi = MonotoneDNF(_random_two_dnf(3).terms | {frozenset([X])})
    f = compile_fbdd(phi)
    g = to_unit_rule(f, phi)
    assert follows_unit_rule(g, phi)
    assert g.nodes[g.root].var == X
    assert len(g) <= unit_rule_size_bound(phi, len(f))
    assert computes(g, phi, sorted(phi.variables()))


@pytest.mark.parametrize('n', [1, 2, 3])
def test_h1(n, compile_fbdd, computes) -> None:
    h10, h11 = ground_hk_family(1, n)
    phi = h10 | h11
    f = compile_fbdd(phi)
    g = to_unit_rule(f, phi)
    assert follows_unit_rule(g, phi)
    assert max_degree(phi) == n
    assert len(g) <= max_degree(phi) * len(f)
    assert computes(g, phi, sorted(phi.variables()))



def test_errors(y_first) -> None:
    phi = MonotoneDNF([[X], [Y, Z]])
    with pytest.raises(Unsupported):
        to_unit_rule(y_first, single(phi))      # type: ignore

    dldd, _ = compile(MonotoneDNF([[X], [Y]]))
    with pytest.raises(InvalidDiagram):
        follows_unit_rule(dldd, MonotoneDNF([[X], [Y]]))
    with pytest.raises(InvalidDiagram):
        to_unit_rule(dldd, MonotoneDNF([[X], [Y]]))
