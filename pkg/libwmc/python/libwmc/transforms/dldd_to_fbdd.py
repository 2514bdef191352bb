"""Conversion of decomposable logic decision diagrams into FBDDs.

Every node of the input is converted together with a pair of
continuations: the nodes to go to when its function comes out true or
false. A Decision passes the continuations on to both children. A
binary combinator converts its heavier child with the continuations it
was given, and its lighter child with continuations leading into the
heavier child's conversion, so the lighter child gets a private copy
for each distinct pair of continuations it is reached with. Not nodes
flip the polarity, which swaps And with Or and Xor with Equiv.

Since the lighter child has at most half the nodes, a node is copied at
most 2^(log2 N) times per level of nesting, which gives the
N 2^(log2(N)^2) size bound.
"""
import logging
import math
from typing import Dict, Generator, List, Optional, Tuple

from libwmc.diagrams.diagram import Diagram, DiagramBuilder, NodeKind
from libwmc.diagrams.operations import remove_noops
from libwmc.diagrams.validation import DiagramClass, validate
from libwmc.errors import InvalidDiagram


_logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7

# node, polarity, continuation if true, continuation if false
_Key = Tuple[int, bool, int, int]

_DUAL_KIND = {
        NodeKind.AND: NodeKind.OR,
        NodeKind.OR: NodeKind.AND,
        NodeKind.XOR: NodeKind.EQUIV,
        NodeKind.EQUIV: NodeKind.XOR}


def fbdd_size_bound(size: int) -> int:
    """Returns N 2^(ceil(log2 N)^2) for a DLDD of size N."""
    if size <= 1:
        return 1
    return size * 2 ** (math.ceil(math.log2(size)) ** 2)


def sub_dag_sizes(d: Diagram) -> List[int]:
    """Counts the distinct nodes reachable from each node, itself included."""
    reach: List[int] = list()
    for index, node in enumerate(d.nodes):
        mask = 1 << index
        for child in node.children:
            mask |= reach[child]
        reach.append(mask)
    return [bin(mask).count('1') for mask in reach]


class DlddConverter:
    """Converts one DLDD into an FBDD.

    Args:
        d: A single-output DLDD.
        budget: Maximum number of nodes of the result.
    """
    def __init__(self, d: Diagram, budget: Optional[int] = DEFAULT_BUDGET
                 ) -> None:
        report = validate(d)
        if report.diagram_class == DiagramClass.INVALID:
            raise InvalidDiagram('Cannot convert an invalid diagram: {}'.format(
                report.describe()))
        if d.outputs != 1:
            raise InvalidDiagram('Only single-output diagrams can be converted')
        self._d = d
        self._weights = sub_dag_sizes(d)
        self._builder = DiagramBuilder(1, budget)
        self._memo: Dict[_Key, int] = dict()

    def convert(self) -> Diagram:
        """Runs the conversion.

        Raises:
            BudgetExhausted: If the result would exceed the budget.
        """
        builder = self._builder
        false_sink = builder.constant(False)
        true_sink = builder.constant(True)
        root = self._run((self._d.root, True, true_sink, false_sink))
        result = remove_noops(builder.build(root, self._d.universe))
        bound = fbdd_size_bound(len(self._d))
        if len(result) > bound:
            raise InvalidDiagram(
                    'Conversion produced {} nodes, more than the bound {}'.format(
                        len(result), bound))
        _logger.info('Converted a DLDD of {} nodes into an FBDD of {}'.format(
            len(self._d), len(result)))
        return result

    def _run(self, start: _Key) -> int:
        stack = [(start, self._convert(start))]
        value: Optional[int] = None
        while True:
            key, task = stack[-1]
            try:
                request = task.send(value)
            except StopIteration as done:
                self._memo[key] = done.value
                stack.pop()
                if not stack:
                    return done.value
                value = done.value
                continue
            if request in self._memo:
                value = self._memo[request]
            else:
                stack.append((request, self._convert(request)))
                value = None

    def _convert(self, key: _Key) -> Generator[_Key, Optional[int], int]:
        index, positive, on_true, on_false = key
        node = self._d.nodes[index]
        kind = node.kind
        if kind == NodeKind.SINK:
            return on_true if node.label[0] == positive else on_false
        if kind == NodeKind.DECISION:
            lo = yield (node.children[0], positive, on_true, on_false)
            hi = yield (node.children[1], positive, on_true, on_false)
            assert lo is not None and hi is not None and node.var is not None
            return self._builder.decision(node.var, lo, hi)
        if kind == NodeKind.NOOP:
            result = yield (node.children[0], positive, on_true, on_false)
            assert result is not None
            return result
        if kind == NodeKind.NOT:
            result = yield (node.children[0], not positive, on_true, on_false)
            assert result is not None
            return result

        left, right = node.children
        if self._weights[left] >= self._weights[right]:
            heavy, light = left, right
        else:
            heavy, light = right, left
        if not positive:
            kind = _DUAL_KIND[kind]

        heavy_pos = yield (heavy, positive, on_true, on_false)
        assert heavy_pos is not None
        if kind == NodeKind.AND:
            result = yield (light, positive, heavy_pos, on_false)
        elif kind == NodeKind.OR:
            result = yield (light, positive, on_true, heavy_pos)
        else:
            heavy_neg = yield (heavy, positive, on_false, on_true)
            assert heavy_neg is not None
            if kind == NodeKind.XOR:
                result = yield (light, positive, heavy_neg, heavy_pos)
            else:
                result = yield (light, positive, heavy_pos, heavy_neg)
        assert result is not None
        return result


def dldd_to_fbdd(d: Diagram, budget: Optional[int] = DEFAULT_BUDGET) -> Diagram:
    """Converts a single-output DLDD into an equivalent FBDD.

    Args:
        d: The diagram to convert.
        budget: Maximum number of nodes to create.

    Returns:
        An FBDD computing the same function, of size at most
        N 2^(ceil(log2 N)^2).

    Raises:
        InvalidDiagram: If d does not validate, or has several outputs.
        BudgetExhausted: If the budget runs out.
    """
    return DlddConverter(d, budget).convert()
