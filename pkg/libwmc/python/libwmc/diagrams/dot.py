from libwmc.diagrams.diagram import Diagram, NodeKind


_SYMBOLS = {
        NodeKind.AND: '∧', NodeKind.OR: '∨', NodeKind.XOR: '⊕',
        NodeKind.EQUIV: '≡', NodeKind.NOT: '¬', NodeKind.NOOP: ''}


def format_dot(d: Diagram, name: str = 'diagram') -> str:
    """Renders a diagram in Graphviz DOT syntax.

    Decision nodes are ellipses labelled with their variable, sinks are
    boxes labelled with their output bits, combinators are circles.
    Dashed edges are 0-edges, solid ones 1-edges or combinator edges.
    """
    lines = ['digraph "{}" {{'.format(name)]
    for index, node in enumerate(d.nodes):
        if node.kind == NodeKind.SINK:
            label = ''.join(str(int(b)) for b in node.label)
            lines.append('  n{} [shape=box, label="{}"];'.format(index, label))
        elif node.kind == NodeKind.DECISION:
            lines.append('  n{} [shape=ellipse, label="{}"];'.format(
                index, node.var))
            lo, hi = node.children
            lines.append('  n{} -> n{} [style=dashed];'.format(index, lo))
            lines.append('  n{} -> n{};'.format(index, hi))
        else:
            shape = 'point' if node.kind == NodeKind.NOOP else 'circle'
            lines.append('  n{} [shape={}, label="{}"];'.format(
                index, shape, _SYMBOLS[node.kind]))
            for child in node.children:
                lines.append('  n{} -> n{};'.format(index, child))
    lines.append('}')
    return '\n'.join(lines) + '\n'
