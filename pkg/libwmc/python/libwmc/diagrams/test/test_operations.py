import pytest

from libwmc.diagrams import (
        DiagramBuilder, NodeKind, dualize, evaluate, project_output,
        remove_noops, representative_assignments, restrict_diagram)
from libwmc.errors import Unsupported
from libwmc.variables import Assignment, VarId


X, Y, Z = (VarId.free(name) for name in 'XYZ')


def _all_assignments():
    for x in (False, True):
        for y in (False, True):
            for z in (False, True):
                yield {X: x, Y: y, Z: z}


def test_dualize(dldd_x_or_y_xor_z) -> None:
    dual = dualize(dldd_x_or_y_xor_z)
    assert NodeKind.AND in dual.kinds()
    assert NodeKind.EQUIV in dual.kinds()
    for theta in _all_assignments():
        assert evaluate(dual, theta) == tuple(
                not v for v in evaluate(dldd_x_or_y_xor_z, theta))

    builder = DiagramBuilder(2)
    d = builder.build(builder.sink([True, False]))
    with pytest.raises(Unsupported):
        dualize(d)


def test_restrict_and_remove_noops(dldd_x_or_y_xor_z) -> None:
    restricted = restrict_diagram(dldd_x_or_y_xor_z, {X: True})
    assert NodeKind.NOOP in restricted.kinds()
    assert restricted.universe == dldd_x_or_y_xor_z.universe

    clean = remove_noops(restricted)
    assert NodeKind.NOOP not in clean.kinds()
    assert X not in clean.tested_variables()
    for theta in _all_assignments():
        expected = evaluate(dldd_x_or_y_xor_z, {**theta, X: True})
        assert evaluate(clean, theta) == expected

    assert restrict_diagram(dldd_x_or_y_xor_z, {}) is dldd_x_or_y_xor_z
    assert remove_noops(dldd_x_or_y_xor_z) is dldd_x_or_y_xor_z


def test_project_output() -> None:
    builder = DiagramBuilder(2)
    a = builder.sink([False, True])
    b = builder.sink([True, True])
    d = builder.build(builder.decision(X, a, b))
    second = project_output(d, 1)
    assert second.outputs == 1
    assert evaluate(second, {X: False}) == (True,)

    with pytest.raises(IndexError):
        project_output(d, 2)


def test_representative_assignments(fbdd_x_and_y) -> None:
    thetas = representative_assignments(fbdd_x_and_y)
    d = fbdd_x_and_y
    assert thetas[d.root] == Assignment()
    # the Y node is only reached via X = 1
    assert thetas[2] == Assignment({X: True})
    # the false sink is first reached from the root
    assert thetas[0] == Assignment({X: False})
    assert thetas[1] == Assignment({X: True, Y: True})
