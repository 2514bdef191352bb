from fractions import Fraction
import logging
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from libwmc.diagrams.diagram import Diagram, NodeKind
from libwmc.diagrams.validation import DiagramClass, validate
from libwmc.errors import InvalidDiagram, UnboundVariable
from libwmc.variables import VarId
from libwmc.weights import WeightMap


_logger = logging.getLogger(__name__)


def _combine(kind: NodeKind, a: bool, b: bool) -> bool:
    if kind == NodeKind.AND:
        return a and b
    if kind == NodeKind.OR:
        return a or b
    if kind == NodeKind.XOR:
        return a != b
    return a == b


def evaluate(d: Diagram, theta: Mapping[VarId, bool]) -> Tuple[bool, ...]:
    """Evaluates a diagram on an assignment.

    Decision nodes follow the child selected by theta, combinator nodes
    combine the values of their children. Only the variables that are
    tested on the way need to be bound.

    Returns:
        The label vector computed by the diagram.

    Raises:
        UnboundVariable: If a tested variable is not bound.
    """
    values: Dict[int, Tuple[bool, ...]] = dict()
    stack = [d.root]
    while stack:
        index = stack[-1]
        if index in values:
            stack.pop()
            continue
        node = d.nodes[index]
        if node.kind == NodeKind.SINK:
            values[index] = node.label
            stack.pop()
            continue
        if node.kind == NodeKind.DECISION:
            assert node.var is not None
            value = theta.get(node.var)
            if value is None:
                raise UnboundVariable(
                        'Variable {} is not bound'.format(node.var))
            needed: Tuple[int, ...] = (node.children[int(value)],)
        else:
            needed = node.children
        missing = [c for c in needed if c not in values]
        if missing:
            stack.extend(missing)
            continue
        if node.kind in (NodeKind.DECISION, NodeKind.NOOP):
            values[index] = values[needed[0]]
        elif node.kind == NodeKind.NOT:
            values[index] = tuple(not v for v in values[needed[0]])
        else:
            left, right = values[needed[0]], values[needed[1]]
            values[index] = tuple(
                    _combine(node.kind, a, b) for a, b in zip(left, right))
        stack.pop()
    return values[d.root]


def wmc(d: Diagram, w: WeightMap) -> List[Fraction]:
    """Computes the probability of each output of a diagram.

    Uses the usual recurrences: a Decision on X gives
    (1 - p(X)) lo + p(X) hi, And multiplies, Or, Xor and Equiv combine
    as for independent events, Not complements.

    Raises:
        InvalidDiagram: If the diagram is not read-once or not
                decomposable, since the recurrences are unsound then.
    """
    report = validate(d)
    if report.diagram_class == DiagramClass.INVALID:
        raise InvalidDiagram(
                'Cannot count models of an invalid diagram: {}'.format(
                    report.describe()))
    probs: List[List[Fraction]] = list()
    one = Fraction(1)
    for node in d.nodes:
        kind = node.kind
        if kind == NodeKind.SINK:
            probs.append([one if b else Fraction(0) for b in node.label])
        elif kind == NodeKind.DECISION:
            assert node.var is not None
            p = w[node.var]
            lo, hi = probs[node.children[0]], probs[node.children[1]]
            probs.append([(1 - p) * a + p * b for a, b in zip(lo, hi)])
        elif kind == NodeKind.NOOP:
            probs.append(probs[node.children[0]])
        elif kind == NodeKind.NOT:
            probs.append([1 - a for a in probs[node.children[0]]])
        else:
            left, right = probs[node.children[0]], probs[node.children[1]]
            if kind == NodeKind.AND:
                probs.append([a * b for a, b in zip(left, right)])
            elif kind == NodeKind.OR:
                probs.append([1 - (1 - a) * (1 - b) for a, b in zip(left, right)])
            elif kind == NodeKind.XOR:
                probs.append([
                    a * (1 - b) + (1 - a) * b for a, b in zip(left, right)])
            else:
                probs.append([
                    a * b + (1 - a) * (1 - b) for a, b in zip(left, right)])
    return probs[d.root]


def evaluation_mask(d: Diagram, variables: Sequence[VarId]) -> np.ndarray:
    """Evaluates a diagram on every assignment to the given variables.

    Entry [o, x] of the result is output o on the assignment setting
    variables[i] to bit i of x. Intended for exhaustive checks on small
    variable sets.

    Raises:
        UnboundVariable: If the diagram tests a variable not in the list.
    """
    position = {var: i for i, var in enumerate(variables)}
    index = np.arange(2 ** len(variables), dtype=np.int64)
    values: List[np.ndarray] = list()
    for node in d.nodes:
        kind = node.kind
        if kind == NodeKind.SINK:
            values.append(np.repeat(
                np.array(node.label, dtype=bool)[:, None], index.shape[0], 1))
        elif kind == NodeKind.DECISION:
            if node.var not in position:
                raise UnboundVariable(
                        'Variable {} is not bound'.format(node.var))
            bit = ((index >> position[node.var]) & 1).astype(bool)
            lo, hi = values[node.children[0]], values[node.children[1]]
            values.append(np.where(bit[None, :], hi, lo))
        elif kind == NodeKind.NOOP:
            values.append(values[node.children[0]])
        elif kind == NodeKind.NOT:
            values.append(~values[node.children[0]])
        else:
            left, right = values[node.children[0]], values[node.children[1]]
            if kind == NodeKind.AND:
                values.append(left & right)
            elif kind == NodeKind.OR:
                values.append(left | right)
            elif kind == NodeKind.XOR:
                values.append(left ^ right)
            else:
                values.append(~(left ^ right))
    return values[d.root]
