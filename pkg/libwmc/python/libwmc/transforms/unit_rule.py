import logging
from typing import Dict, FrozenSet, List, Sequence, Tuple

from libwmc.diagrams.diagram import Diagram, DiagramBuilder, NodeKind
from libwmc.diagrams.operations import representative_assignments
from libwmc.diagrams.validation import DiagramClass, validate
from libwmc.errors import InvalidDiagram, Unsupported
from libwmc.formula import MonotoneDNF, max_degree, restrict, units
from libwmc.variables import VarId


_logger = logging.getLogger(__name__)


def _check_fbdd(f: Diagram) -> None:
    report = validate(f)
    if not report.is_read_once:
        raise InvalidDiagram('Not read-once: {}'.format(report.describe()))
    if report.diagram_class != DiagramClass.FBDD:
        raise InvalidDiagram('Expected an FBDD, got a {}'.format(
            report.diagram_class.value))
    if f.outputs != 1:
        raise InvalidDiagram('Expected a single-output diagram')


def node_residuals(f: Diagram, phi: MonotoneDNF) -> List[MonotoneDNF]:
    """Restricts phi along a representative path to every node of f."""
    return [restrict(phi, theta) for theta in representative_assignments(f)]


def _units_or_empty(phi: MonotoneDNF) -> FrozenSet[VarId]:
    return frozenset() if phi.is_constant() else units(phi)


def follows_unit_rule(f: Diagram, phi: MonotoneDNF) -> bool:
    """Checks whether every node with a unit in its residual tests one.

    Args:
        f: An FBDD computing phi.
        phi: The formula.

    Raises:
        InvalidDiagram: If f is not a single-output FBDD.
    """
    _check_fbdd(f)
    residuals = node_residuals(f, phi)
    for index, node in enumerate(f.nodes):
        if node.kind != NodeKind.DECISION:
            continue
        node_units = _units_or_empty(residuals[index])
        if node_units and node.var not in node_units:
            _logger.debug('Node {} tests {} but has units {}'.format(
                index, node.var, sorted(str(u) for u in node_units)))
            return False
    return True


def unit_rule_size_bound(phi: MonotoneDNF, size: int) -> int:
    """Returns the node bound guaranteed by to_unit_rule.

    Only 1-edges create new units, at most max_degree(phi) of them, and
    the root chain adds the initial units.
    """
    initial = len(_units_or_empty(phi))
    return (max_degree(phi) + 1) * size + initial + 2


def to_unit_rule(f: Diagram, phi: MonotoneDNF) -> Diagram:
    """Rewrites an FBDD for phi into one that follows the unit rule.

    Every edge (u, v) along which new units appear is replaced by a
    chain testing those units, sorted, with 1-edges to the 1-sink and
    0-edges continuing to v. Nodes whose residual is constant become
    sinks, and nodes testing a unit that is already known to be 0 are
    bypassed towards their 0-child.

    Args:
        f: A single-output FBDD computing phi.
        phi: A monotone formula.

    Returns:
        An FBDD for phi that follows the unit rule.

    Raises:
        Unsupported: If phi is not a monotone DNF.
        InvalidDiagram: If f is not a single-output FBDD.
    """
    if not isinstance(phi, MonotoneDNF):
        raise Unsupported('The unit rule needs a monotone formula')
    _check_fbdd(f)
    residuals = node_residuals(f, phi)
    node_units = [_units_or_empty(r) for r in residuals]

    builder = DiagramBuilder(1)
    one = builder.constant(True)
    new_index: List[int] = list()
    chains: Dict[Tuple[Tuple[VarId, ...], int], int] = dict()

    def chain(new_units: Sequence[VarId], target: int) -> int:
        key = (tuple(new_units), target)
        if key not in chains:
            node = target
            for var in reversed(new_units):
                node = builder.decision(var, node, one)
            chains[key] = node
        return chains[key]

    for index, node in enumerate(f.nodes):
        residual = residuals[index]
        if residual.is_constant():
            new_index.append(builder.constant(residual.is_true()))
        elif node.kind == NodeKind.NOOP:
            new_index.append(new_index[node.children[0]])
        elif node.kind != NodeKind.DECISION:
            raise InvalidDiagram('Unexpected {} node in an FBDD'.format(node.kind))
        elif node.var in node_units[index]:
            new_index.append(new_index[node.children[0]])
        else:
            assert node.var is not None
            lo, hi = node.children
            new_index.append(builder.decision(
                node.var,
                chain(sorted(node_units[lo] - node_units[index]), new_index[lo]),
                chain(sorted(node_units[hi] - node_units[index]), new_index[hi])))

    root = chain(sorted(node_units[f.root]), new_index[f.root])
    result = builder.build(root, f.universe | phi.variables())
    _logger.info('Unit rule rewrite: {} nodes became {}'.format(
        len(f), len(result)))
    return result


def unit_ledger(
        f: Diagram, phi: MonotoneDNF
        ) -> Dict[Tuple[int, int], FrozenSet[VarId]]:
    """Lists the new units U(v) - U(u) along every edge (u, v) of f.

    Edges without new units are left out.
    """
    _check_fbdd(f)
    node_units = [_units_or_empty(r) for r in node_residuals(f, phi)]
    ledger: Dict[Tuple[int, int], FrozenSet[VarId]] = dict()
    for index, node in enumerate(f.nodes):
        for child in node.children:
            new_units = node_units[child] - node_units[index]
            if new_units:
                ledger[(index, child)] = new_units
    return ledger

