from fractions import Fraction
import logging

from libwmc.diagrams.diagram import Diagram
from libwmc.diagrams.validation import DiagramClass, validate
from libwmc.errors import InvalidDiagram, LowerBoundViolation


_logger = logging.getLogger(__name__)


def fbdd_lower_bound(n: int) -> Fraction:
    """Minimum size of any FBDD for H_k over [n], 2^(n-1) / n."""
    return Fraction(2 ** (n - 1), n)


def check_lower_bound(d: Diagram, n: int) -> None:
    """Checks that an FBDD claimed to compute H_k is not too small.

    No FBDD for H_k can be smaller than the bound, so a smaller one
    means that a construction produced a wrong function or a diagram
    that is not read-once.

    Raises:
        InvalidDiagram: If d is not an FBDD.
        LowerBoundViolation: If d is smaller than the bound.
    """
    report = validate(d)
    if report.diagram_class != DiagramClass.FBDD:
        raise InvalidDiagram('Expected an FBDD, got {}'.format(report.describe()))
    bound = fbdd_lower_bound(n)
    if len(d) < bound:
        raise LowerBoundViolation(
                'FBDD with {} nodes for n = {} is below the bound {}'.format(
                    len(d), n, float(bound)))
    _logger.debug('FBDD with {} nodes meets the bound {} for n = {}'.format(
        len(d), float(bound), n))
