import pytest

from libwmc.diagrams import Diagram, DiagramBuilder, NodeKind
from libwmc.variables import VarId


X, Y, Z = (VarId.free(name) for name in 'XYZ')


@pytest.fixture
def fbdd_x_and_y() -> Diagram:
    builder = DiagramBuilder()
    f, t = builder.constant(False), builder.constant(True)
    y = builder.decision(Y, f, t)
    return builder.build(builder.decision(X, f, y))


@pytest.fixture
def dldd_x_or_y_xor_z() -> Diagram:
    """(X or Y) xor Z, with an Or node over two decisions."""
    builder = DiagramBuilder()
    f, t = builder.constant(False), builder.constant(True)
    x = builder.decision(X, f, t)
    y = builder.decision(Y, f, t)
    z = builder.decision(Z, f, t)
    either = builder.combine(NodeKind.OR, x, y)
    return builder.build(builder.combine(NodeKind.XOR, either, z))
