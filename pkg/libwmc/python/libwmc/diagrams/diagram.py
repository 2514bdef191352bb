from enum import Enum
import logging
from typing import (
        Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence,
        Tuple)

from libwmc.errors import BudgetExhausted, InvalidDiagram
from libwmc.variables import VarId


_logger = logging.getLogger(__name__)


class NodeKind(Enum):
    """Kinds of diagram nodes, valued by their code in mdd files."""
    SINK = 'S'
    DECISION = 'D'
    AND = 'A'
    OR = 'O'
    XOR = 'X'
    EQUIV = 'E'
    NOT = 'N'
    NOOP = 'P'


BINARY_KINDS = frozenset([NodeKind.AND, NodeKind.OR, NodeKind.XOR, NodeKind.EQUIV])

UNARY_KINDS = frozenset([NodeKind.NOT, NodeKind.NOOP])


class Node(NamedTuple):
    """A diagram node.

    For Decision nodes, children are (lo, hi). Sinks have a label and no
    children; all other nodes have one or two children and no label.
    """
    kind: NodeKind
    var: Optional[VarId] = None
    children: Tuple[int, ...] = ()
    label: Tuple[bool, ...] = ()


class Diagram:
    """A rooted DAG of decision, combinator and sink nodes.

    Nodes are stored so that children come before their parents, and
    only nodes reachable from the root are stored, so the root is the
    last node. Diagrams are immutable.

    Attributes:
        nodes: The nodes, in topological order.
        outputs: Length of the sink labels.
        universe: The variables the diagram is a function of; a
                superset of the variables it tests.
    """
    def __init__(
            self, nodes: Sequence[Node], outputs: int,
            universe: Optional[Iterable[VarId]] = None) -> None:
        """Create a Diagram.

        Use DiagramBuilder to construct diagrams; this constructor only
        checks the storage invariants.

        Raises:
            InvalidDiagram: If the storage invariants are violated.
        """
        if not nodes:
            raise InvalidDiagram('A diagram needs at least one node')
        for index, node in enumerate(nodes):
            if any(c < 0 or c >= index for c in node.children):
                raise InvalidDiagram(
                        'Node {} has a child that does not precede it'.format(
                            index))
            if node.kind == NodeKind.SINK:
                if len(node.label) != outputs or node.children:
                    raise InvalidDiagram('Malformed sink at node {}'.format(index))
            elif node.kind == NodeKind.DECISION:
                if node.var is None or len(node.children) != 2:
                    raise InvalidDiagram(
                            'Malformed decision at node {}'.format(index))
            elif node.kind in BINARY_KINDS:
                if len(node.children) != 2:
                    raise InvalidDiagram('Malformed node {}'.format(index))
            elif len(node.children) != 1:
                raise InvalidDiagram('Malformed node {}'.format(index))
        self.nodes = tuple(nodes)
        self.outputs = outputs
        tested = frozenset(n.var for n in self.nodes if n.var is not None)
        if universe is None:
            self.universe = tested
        else:
            self.universe = frozenset(universe) | tested
        self._var_bits: Optional[Dict[VarId, int]] = None
        self._vars_below: Optional[List[int]] = None

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    def __len__(self) -> int:
        return len(self.nodes)

    def kinds(self) -> FrozenSet[NodeKind]:
        return frozenset(n.kind for n in self.nodes)

    def tested_variables(self) -> FrozenSet[VarId]:
        return frozenset(n.var for n in self.nodes if n.var is not None)

    def var_bits(self) -> Dict[VarId, int]:
        """Maps each variable to its bit position in vars_below masks."""
        if self._var_bits is None:
            self._var_bits = {
                    var: i for i, var in enumerate(sorted(self.universe))}
        return self._var_bits

    def vars_below(self) -> List[int]:
        """Returns, per node, the variables tested in its sub-DAG.

        The sets are bitmasks over the positions given by var_bits,
        computed once bottom-up and cached.
        """
        if self._vars_below is None:
            bits = self.var_bits()
            below: List[int] = list()
            for node in self.nodes:
                mask = 0
                for child in node.children:
                    mask |= below[child]
                if node.var is not None:
                    mask |= 1 << bits[node.var]
                below.append(mask)
            self._vars_below = below
        return self._vars_below

    def mask_variables(self, mask: int) -> List[VarId]:
        """Converts a vars_below mask back to sorted variables."""
        ordered = sorted(self.universe)
        return [var for i, var in enumerate(ordered) if (mask >> i) & 1]

    def parents(self) -> List[List[int]]:
        """Returns the parents of each node, in increasing order."""
        result: List[List[int]] = [list() for _ in self.nodes]
        for index, node in enumerate(self.nodes):
            for child in node.children:
                result[child].append(index)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
                self.nodes == other.nodes and self.outputs == other.outputs and
                self.universe == other.universe)

    def __repr__(self) -> str:
        return 'Diagram({} nodes, {} outputs)'.format(
                len(self.nodes), self.outputs)


class DiagramBuilder:
    """Constructs a diagram bottom-up.

    Every constructor method appends a node and returns its index, so
    children always precede their parents. Sinks are shared: asking for
    the same label twice returns the same node.

    Args:
        outputs: Length of the sink labels.
        budget: Maximum number of nodes, or None for no limit.
    """
    def __init__(self, outputs: int = 1, budget: Optional[int] = None) -> None:
        self.outputs = outputs
        self.budget = budget
        self.nodes: List[Node] = list()
        self._sinks: Dict[Tuple[bool, ...], int] = dict()

    def __len__(self) -> int:
        return len(self.nodes)

    def add(self, node: Node) -> int:
        """Appends a node.

        Raises:
            BudgetExhausted: If the budget would be exceeded.
        """
        if self.budget is not None and len(self.nodes) >= self.budget:
            raise BudgetExhausted(
                    'Node budget of {} exhausted'.format(self.budget))
        self.nodes.append(node)
        return len(self.nodes) - 1

    def sink(self, label: Sequence[bool]) -> int:
        key = tuple(bool(b) for b in label)
        if len(key) != self.outputs:
            raise InvalidDiagram('Sink label {} has the wrong length'.format(key))
        if key not in self._sinks:
            self._sinks[key] = self.add(Node(NodeKind.SINK, label=key))
        return self._sinks[key]

    def constant(self, value: bool) -> int:
        """Returns a sink labelled with value in every output."""
        return self.sink((value,) * self.outputs)

    def decision(self, var: VarId, lo: int, hi: int) -> int:
        return self.add(Node(NodeKind.DECISION, var, (lo, hi)))

    def combine(self, kind: NodeKind, left: int, right: int) -> int:
        if kind not in BINARY_KINDS:
            raise ValueError('{} is not a binary node kind'.format(kind))
        return self.add(Node(kind, None, (left, right)))

    def negate(self, child: int) -> int:
        return self.add(Node(NodeKind.NOT, None, (child,)))

    def noop(self, child: int) -> int:
        return self.add(Node(NodeKind.NOOP, None, (child,)))

    def copy_from(
            self, diagram: Diagram, mapping: Optional[Dict[int, int]] = None
            ) -> int:
        """Copies a diagram into this builder.

        Returns:
            The index of the copied root.
        """
        if mapping is None:
            mapping = dict()
        for index, node in enumerate(diagram.nodes):
            if node.kind == NodeKind.SINK:
                mapping[index] = self.sink(node.label)
            else:
                mapping[index] = self.add(node._replace(
                    children=tuple(mapping[c] for c in node.children)))
        return mapping[diagram.root]

    def build(
            self, root: int, universe: Optional[Iterable[VarId]] = None
            ) -> Diagram:
        """Creates a Diagram from the nodes reachable from root.

        Unreachable nodes are dropped and the rest renumbered, keeping
        their relative order, so the root ends up last.
        """
        return Diagram(prune(self.nodes, root), self.outputs, universe)


def prune(nodes: Sequence[Node], root: int) -> List[Node]:
    """Returns the nodes reachable from root, renumbered, root last."""
    reachable = [False] * (root + 1)
    reachable[root] = True
    for index in range(root, -1, -1):
        if reachable[index]:
            for child in nodes[index].children:
                reachable[child] = True
    renumber: Dict[int, int] = dict()
    result: List[Node] = list()
    for index in range(root + 1):
        if reachable[index]:
            node = nodes[index]
            renumber[index] = len(result)
            result.append(node._replace(
                children=tuple(renumber[c] for c in node.children)))
    return result
