from pathlib import Path
from typing import cast

import msgpack

from libwmc.diagrams.diagram import Diagram, Node, NodeKind
from libwmc.errors import FormatError, InvalidDiagram
from libwmc.variables import VarId


PACK_VERSION_BYTE = b'1'


def diagram_to_bytes(d: Diagram) -> bytes:
    """Encodes a diagram in the binary pack format.

    The result is a version byte followed by a msgpack map holding the
    output count, the variable names, and the nodes as flat lists of
    a kind code followed by a variable id (or -1) and child indices or
    label bits.

    Args:
        d: The diagram to encode.

    Returns:
        The encoded diagram, including the version byte.
    """
    variables = sorted(d.universe)
    var_ids = {var: i for i, var in enumerate(variables)}
    nodes = list()
    for node in d.nodes:
        var_id = -1 if node.var is None else var_ids[node.var]
        rest = [int(b) for b in node.label] if node.label else list(node.children)
        nodes.append([node.kind.value, var_id] + rest)
    return PACK_VERSION_BYTE + cast(bytes, msgpack.packb({
        'outputs': d.outputs,
        'variables': [str(var) for var in variables],
        'nodes': nodes}))


def diagram_from_bytes(data: bytes) -> Diagram:
    """Decodes a diagram written by diagram_to_bytes.

    Raises:
        FormatError: If the data is not a valid pack.
    """
    if data[:1] != PACK_VERSION_BYTE:
        raise FormatError('Unknown diagram pack version')
    try:
        dct = msgpack.unpackb(data[1:])
        variables = [VarId.parse(name) for name in dct['variables']]
        nodes = list()
        for kind_code, var_id, *rest in dct['nodes']:
            kind = NodeKind(kind_code)
            if kind == NodeKind.SINK:
                nodes.append(Node(kind, label=tuple(bool(b) for b in rest)))
            else:
                var = None if var_id < 0 else variables[var_id]
                nodes.append(Node(kind, var, tuple(rest)))
        return Diagram(nodes, dct['outputs'], variables)
    except (ValueError, KeyError, TypeError, IndexError,
            msgpack.UnpackException, InvalidDiagram) as e:
        raise FormatError('Invalid diagram pack: {}'.format(e))


def load_pack(path: Path) -> Diagram:
    return diagram_from_bytes(path.read_bytes())


def save_pack(d: Diagram, path: Path) -> None:
    path.write_bytes(diagram_to_bytes(d))
