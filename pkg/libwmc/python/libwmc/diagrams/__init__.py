from libwmc.diagrams.diagram import Diagram, DiagramBuilder, Node, NodeKind
from libwmc.diagrams.evaluation import evaluate, evaluation_mask, wmc
from libwmc.diagrams.operations import (
        dualize, project_output, remove_noops, representative_assignments,
        restrict_diagram)
from libwmc.diagrams.validation import (
        DiagramClass, ValidationReport, validate)


__all__ = [
        'Diagram', 'DiagramBuilder', 'DiagramClass', 'Node', 'NodeKind',
        'ValidationReport', 'dualize', 'evaluate', 'evaluation_mask',
        'project_output', 'remove_noops', 'representative_assignments',
        'restrict_diagram', 'validate', 'wmc']
