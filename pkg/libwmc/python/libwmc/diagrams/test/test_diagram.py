import pytest

from libwmc.diagrams import Diagram, DiagramBuilder, Node, NodeKind
from libwmc.errors import BudgetExhausted, InvalidDiagram
from libwmc.variables import VarId


X, Y = VarId.free('X'), VarId.free('Y')


def test_builder_shares_sinks() -> None:
    builder = DiagramBuilder(2)
    a = builder.sink([True, False])
    assert builder.sink((1, 0)) == a
    assert builder.constant(False) != a
    assert len(builder) == 2

    with pytest.raises(InvalidDiagram):
        builder.sink([True])


def test_build_prunes(fbdd_x_and_y) -> None:
    builder = DiagramBuilder()
    f, t = builder.constant(False), builder.constant(True)
    builder.decision(Y, t, f)
    root = builder.decision(X, f, t)
    d = builder.build(root, [X, Y])
    assert len(d) == 3
    assert d.root == 2
    assert d.nodes[d.root].children == (0, 1)
    assert d.universe == frozenset([X, Y])
    assert d.tested_variables() == frozenset([X])

    assert len(fbdd_x_and_y) == 4
    assert fbdd_x_and_y.kinds() == frozenset([NodeKind.SINK, NodeKind.DECISION])


def test_storage_invariants() -> None:
    sink = Node(NodeKind.SINK, label=(True,))
    with pytest.raises(InvalidDiagram):
        Diagram([], 1)
    with pytest.raises(InvalidDiagram):
        Diagram([sink, Node(NodeKind.DECISION, X, (0, 2))], 1)
    with pytest.raises(InvalidDiagram):
        Diagram([sink, Node(NodeKind.DECISION, None, (0, 0))], 1)
    with pytest.raises(InvalidDiagram):
        Diagram([Node(NodeKind.SINK, label=(True, False))], 1)
    with pytest.raises(InvalidDiagram):
        Diagram([sink, Node(NodeKind.AND, None, (0,))], 1)


def test_budget() -> None:
    builder = DiagramBuilder(1, 3)
    f, t = builder.constant(False), builder.constant(True)
    builder.decision(X, f, t)
    with pytest.raises(BudgetExhausted):
        builder.decision(Y, f, t)


def test_combine_kind() -> None:
    builder = DiagramBuilder()
    t = builder.constant(True)
    with pytest.raises(ValueError):
        builder.combine(NodeKind.NOT, t, t)


def test_vars_below(fbdd_x_and_y) -> None:
    d = fbdd_x_and_y
    below = d.vars_below()
    assert d.mask_variables(below[d.root]) == [X, Y]
    assert d.mask_variables(below[0]) == []
    assert d.parents()[0] == [2, 3]


def test_copy_from(fbdd_x_and_y) -> None:
    builder = DiagramBuilder()
    root = builder.copy_from(fbdd_x_and_y)
    assert builder.build(root) == fbdd_x_and_y
