"""Line-oriented text format for diagrams.

The first line is ``mdd <num_nodes> <num_vars> <num_outputs>``. Then
follows one line per node, children before parents, with the root
last. Node ids are the 0-based order of these lines. A node is one of
``S <b_1> .. <b_m>``, ``D <var> <lo> <hi>``, ``A <l> <r>``,
``O <l> <r>``, ``X <l> <r>``, ``E <l> <r>``, ``N <c>`` or ``P <c>``.
Variables are numbered 0..num_vars-1; optional trailing lines
``map <id> <name>`` give their names, unmapped ones are called x<id>.
Names must be unique, also with respect to these defaults.
"""
from pathlib import Path
from typing import Dict, List

from libwmc.diagrams.diagram import (
        BINARY_KINDS, Diagram, Node, NodeKind, UNARY_KINDS, prune)
from libwmc.errors import FormatError, InvalidDiagram
from libwmc.variables import VarId


def format_mdd(d: Diagram) -> str:
    variables = sorted(d.universe)
    var_ids = {var: i for i, var in enumerate(variables)}
    lines = ['mdd {} {} {}'.format(len(d.nodes), len(variables), d.outputs)]
    for node in d.nodes:
        if node.kind == NodeKind.SINK:
            fields = [str(int(b)) for b in node.label]
        elif node.kind == NodeKind.DECISION:
            assert node.var is not None
            fields = [str(var_ids[node.var])]
            fields.extend(str(c) for c in node.children)
        else:
            fields = [str(c) for c in node.children]
        lines.append(' '.join([node.kind.value] + fields))
    for var in variables:
        lines.append('map {} {}'.format(var_ids[var], var))
    return '\n'.join(lines) + '\n'


def parse_mdd(text: str, source: str = '<string>') -> Diagram:
    """Parses a diagram in mdd format.

    Raises:
        FormatError: If the text is malformed.
    """
    lines = [
            (lineno, line.split())
            for lineno, line in enumerate(text.splitlines(), 1)
            if line.strip() and not line.lstrip().startswith('#')]
    if not lines or lines[0][1][0] != 'mdd' or len(lines[0][1]) != 4:
        raise FormatError('Missing mdd header', source, 1)
    try:
        num_nodes, num_vars, outputs = (int(x) for x in lines[0][1][1:])
    except ValueError:
        raise FormatError('Invalid mdd header', source, lines[0][0])

    if num_nodes < 1:
        raise FormatError('A diagram needs at least one node', source)
    node_lines = lines[1:1 + num_nodes]
    if len(node_lines) != num_nodes:
        raise FormatError('Expected {} nodes'.format(num_nodes), source)
    names: Dict[int, VarId] = dict()
    for lineno, fields in lines[1 + num_nodes:]:
        if fields[0] != 'map' or len(fields) != 3:
            raise FormatError('Expected a map line', source, lineno)
        try:
            var_id = int(fields[1])
            name = VarId.parse(fields[2])
        except (ValueError, FormatError) as e:
            raise FormatError('Invalid map line: {}'.format(e), source, lineno)
        if not 0 <= var_id < num_vars:
            raise FormatError('Variable id out of range', source, lineno)
        if var_id in names:
            raise FormatError(
                    'Variable {} is mapped twice'.format(var_id), source, lineno)
        if name in names.values():
            raise FormatError(
                    'Name {} is mapped twice'.format(name), source, lineno)
        names[var_id] = name

    variables: List[VarId] = list()
    for var_id in range(num_vars):
        if var_id in names:
            variables.append(names[var_id])
            continue
        default = VarId.free('x{}'.format(var_id))
        if default in names.values():
            raise FormatError(
                    'Unmapped variable {} collides with a mapped name'.format(
                        var_id), source)
        variables.append(default)

    nodes: List[Node] = list()
    for lineno, fields in node_lines:
        try:
            kind = NodeKind(fields[0])
            args = [int(x) for x in fields[1:]]
        except ValueError:
            raise FormatError('Invalid node line', source, lineno)
        expected = {
                NodeKind.SINK: outputs, NodeKind.DECISION: 3}.get(
                    kind, 2 if kind in BINARY_KINDS else 1)
        if len(args) != expected:
            raise FormatError(
                    'Node {} needs {} fields'.format(kind.value, expected),
                    source, lineno)
        children = args[1:] if kind == NodeKind.DECISION else args
        if kind != NodeKind.SINK and any(
                c < 0 or c >= len(nodes) for c in children):
            raise FormatError(
                    'Children must precede their parent', source, lineno)
        if kind == NodeKind.SINK:
            if any(a not in (0, 1) for a in args):
                raise FormatError('Sink labels must be 0 or 1', source, lineno)
            nodes.append(Node(kind, label=tuple(bool(a) for a in args)))
        elif kind == NodeKind.DECISION:
            if not 0 <= args[0] < num_vars:
                raise FormatError('Variable id out of range', source, lineno)
            nodes.append(Node(kind, variables[args[0]], (args[1], args[2])))
        else:
            assert kind in BINARY_KINDS or kind in UNARY_KINDS
            nodes.append(Node(kind, None, tuple(args)))
    try:
        return Diagram(prune(nodes, len(nodes) - 1), outputs, variables)
    except InvalidDiagram as e:
        raise FormatError(str(e), source)


def load_mdd(path: Path) -> Diagram:
    return parse_mdd(path.read_text(), str(path))


def save_mdd(d: Diagram, path: Path) -> None:
    path.write_text(format_mdd(d))
