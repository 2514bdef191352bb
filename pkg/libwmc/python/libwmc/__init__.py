from libwmc.diagrams import Diagram, DiagramBuilder, NodeKind, validate, wmc
from libwmc.formula import MonotoneDNF
from libwmc.lineage import CombinatorFn, CompositeLineage, QuerySpec
from libwmc.variables import Assignment, Relation, VarId
from libwmc.version import __version__
from libwmc.weights import WeightMap


# Note that libwmc.version above is created by the build system; it's okay
# that it's not present.

__all__ = [
        '__version__', 'Assignment', 'CombinatorFn', 'CompositeLineage',
        'Diagram', 'DiagramBuilder', 'MonotoneDNF', 'NodeKind', 'QuerySpec',
        'Relation', 'VarId', 'WeightMap', 'validate', 'wmc']
