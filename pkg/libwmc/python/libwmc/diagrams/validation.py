from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from libwmc.diagrams.diagram import BINARY_KINDS, Diagram, NodeKind
from libwmc.variables import VarId


class DiagramClass(Enum):
    FBDD = 'FBDD'
    DEC_DNNF = 'dec-DNNF'
    DLDD = 'DLDD'
    INVALID = 'invalid'


@dataclass
class ValidationReport:
    """Result of checking a diagram's structural invariants.

    Attributes:
        is_read_once: Whether no path tests a variable twice.
        read_once_witness: On failure, a path of node indices from the
                root through the offending node to a second test of the
                same variable.
        repeated_variable: On failure, the variable tested twice.
        decomposable: Whether the children of every And, Or, Xor and
                Equiv node test disjoint variables.
        offending_node: On failure, a non-decomposable node.
        shared_variable: On failure, a variable tested below both of
                its children.
        diagram_class: The most specific class the diagram is in.
    """
    is_read_once: bool = True
    read_once_witness: List[int] = field(default_factory=list)
    repeated_variable: Optional[VarId] = None
    decomposable: bool = True
    offending_node: Optional[int] = None
    shared_variable: Optional[VarId] = None
    diagram_class: DiagramClass = DiagramClass.FBDD

    def describe(self) -> str:
        if self.diagram_class != DiagramClass.INVALID:
            return self.diagram_class.value
        problems = list()
        if not self.is_read_once:
            problems.append('variable {} tested twice on path {}'.format(
                self.repeated_variable,
                ' -> '.join(str(i) for i in self.read_once_witness)))
        if not self.decomposable:
            problems.append('node {} shares variable {} between children'.format(
                self.offending_node, self.shared_variable))
        return 'invalid: ' + '; '.join(problems)


def _witness_path(d: Diagram, node: int, var: VarId) -> List[int]:
    parents = d.parents()
    up = [node]
    while parents[up[-1]]:
        up.append(parents[up[-1]][0])
    path = list(reversed(up))

    bit = 1 << d.var_bits()[var]
    below = d.vars_below()
    current = node
    while True:
        candidates = [c for c in d.nodes[current].children if below[c] & bit]
        current = candidates[0]
        path.append(current)
        if d.nodes[current].var == var:
            return path


def validate(d: Diagram) -> ValidationReport:
    """Checks read-once-ness and decomposability, and classifies d.

    A Decision node on X violates read-once-ness if X is tested again
    below either of its children. A binary combinator node is not
    decomposable if its children's sub-DAGs test a common variable.
    """
    report = ValidationReport()
    below = d.vars_below()
    bits = d.var_bits()
    for index, node in enumerate(d.nodes):
        if node.kind == NodeKind.DECISION and report.is_read_once:
            var = node.var
            assert var is not None
            bit = 1 << bits[var]
            if any(below[c] & bit for c in node.children):
                report.is_read_once = False
                report.repeated_variable = var
                report.read_once_witness = _witness_path(d, index, var)
        elif node.kind in BINARY_KINDS and report.decomposable:
            shared = below[node.children[0]] & below[node.children[1]]
            if shared:
                report.decomposable = False
                report.offending_node = index
                lowest = shared & -shared
                report.shared_variable = d.mask_variables(lowest)[0]

    kinds = d.kinds()
    if not report.is_read_once or not report.decomposable:
        report.diagram_class = DiagramClass.INVALID
    elif kinds & {NodeKind.OR, NodeKind.XOR, NodeKind.EQUIV, NodeKind.NOT}:
        report.diagram_class = DiagramClass.DLDD
    elif NodeKind.AND in kinds:
        report.diagram_class = DiagramClass.DEC_DNNF
    else:
        report.diagram_class = DiagramClass.FBDD
    return report
