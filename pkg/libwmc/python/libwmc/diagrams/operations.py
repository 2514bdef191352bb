from typing import List, Mapping, Optional

from libwmc.diagrams.diagram import Diagram, Node, NodeKind, prune
from libwmc.errors import Unsupported
from libwmc.variables import Assignment, VarId


_DUAL_KIND = {
        NodeKind.AND: NodeKind.OR,
        NodeKind.OR: NodeKind.AND,
        NodeKind.XOR: NodeKind.EQUIV,
        NodeKind.EQUIV: NodeKind.XOR}


def dualize(d: Diagram) -> Diagram:
    """Returns the dual diagram, which computes the negated function.

    Sink labels are flipped, And and Or are swapped, as are Xor and
    Equiv. Everything else keeps its shape.

    Raises:
        Unsupported: If d has more than one output.
    """
    if d.outputs != 1:
        raise Unsupported('Only single-output diagrams can be dualized')
    nodes = list()
    for node in d.nodes:
        if node.kind == NodeKind.SINK:
            nodes.append(node._replace(label=(not node.label[0],)))
        else:
            nodes.append(node._replace(kind=_DUAL_KIND.get(node.kind, node.kind)))
    return Diagram(nodes, 1, d.universe)


def remove_noops(d: Diagram) -> Diagram:
    """Returns an equivalent diagram without NoOp nodes.

    Every edge into a NoOp is redirected to the first non-NoOp node
    below it. Nodes that become unreachable are dropped.
    """
    if NodeKind.NOOP not in d.kinds():
        return d
    target: List[int] = list()
    for index, node in enumerate(d.nodes):
        if node.kind == NodeKind.NOOP:
            target.append(target[node.children[0]])
        else:
            target.append(index)
    nodes = [
            node._replace(children=tuple(target[c] for c in node.children))
            for node in d.nodes]
    return Diagram(prune(nodes, target[d.root]), d.outputs, d.universe)


def restrict_diagram(d: Diagram, theta: Mapping[VarId, bool]) -> Diagram:
    """Substitutes the bound variables of theta into a diagram.

    Each Decision node testing a variable bound by theta becomes a
    NoOp to the child theta selects. The variable universe is kept, so
    the result is still a function of the bound variables, just one
    that ignores them.
    """
    if not theta:
        return d
    nodes = list()
    for node in d.nodes:
        if node.kind == NodeKind.DECISION and node.var in theta:
            assert node.var is not None
            child = node.children[int(theta[node.var])]
            nodes.append(Node(NodeKind.NOOP, None, (child,)))
        else:
            nodes.append(node)
    return Diagram(prune(nodes, len(nodes) - 1), d.outputs, d.universe)


def project_output(d: Diagram, output: int) -> Diagram:
    """Returns a single-output diagram computing one output of d."""
    if not 0 <= output < d.outputs:
        raise IndexError('Output {} out of range'.format(output))
    nodes = [
            node._replace(label=(node.label[output],))
            if node.kind == NodeKind.SINK else node
            for node in d.nodes]
    return Diagram(nodes, 1, d.universe)


def representative_assignments(d: Diagram) -> List[Assignment]:
    """Picks, for every node, the assignment along one path to it.

    Nodes are visited from the root down, and each node takes the path
    of the first parent that reaches it. For a read-once diagram, none
    of the variables in a node's assignment are tested below it.
    """
    result: List[Optional[Assignment]] = [None] * len(d.nodes)
    result[d.root] = Assignment()
    for index in range(d.root, -1, -1):
        theta = result[index]
        if theta is None:
            continue
        node = d.nodes[index]
        if node.kind == NodeKind.DECISION:
            assert node.var is not None
            for value, child in enumerate(node.children):
                if result[child] is None:
                    result[child] = theta.extended(node.var, bool(value))
        else:
            for child in node.children:
                if result[child] is None:
                    result[child] = theta
    return [theta if theta is not None else Assignment() for theta in result]
