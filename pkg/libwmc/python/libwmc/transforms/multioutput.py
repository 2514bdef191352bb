"""Conversion of an FBDD for f(H_k0, ..., H_kk) into a multi-output FBDD.

Nodes where the restricted family still has at least 4 independent
transversals form the region V4. Inside V4 the conversion copies the
FBDD, inserting tests of the H_k-units that appear along each edge;
setting such a unit to 1 leaves a transversal-free family, which a
family OBDD handles. Where a path leaves V4, the H_k-units are all 0
and the residual is transparent, so a family OBDD for the
representative restriction finishes the computation.
"""
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, cast

import numpy as np

from libwmc.diagrams.diagram import Diagram, DiagramBuilder, NodeKind
from libwmc.diagrams.evaluation import evaluate, evaluation_mask
from libwmc.diagrams.operations import remove_noops
from libwmc.diagrams.validation import DiagramClass, validate
from libwmc.errors import InvalidDiagram, NotFullyDependent, WrongFunction
from libwmc.formula import MonotoneDNF
from libwmc.lineage.combinator import CombinatorFn
from libwmc.lineage.composite import CompositeLineage
from libwmc.lineage.grounding import (
        ground_hk_family, ground_query, grounded_variables)
from libwmc.oracle import evaluation_mask as lineage_mask
from libwmc.transforms.family_obdd import DEFAULT_T_CAP, FamilyObddBuilder
from libwmc.transforms.transversals import (
        TransversalSet, hk_units_of, residual_family, transversals_of)
from libwmc.variables import Assignment, VarId


_logger = logging.getLogger(__name__)

MULTIOUTPUT_SIZE_CONSTANT = 512

EXHAUSTIVE_CHECK_LIMIT = 16

RANDOM_CHECK_SAMPLES = 256


def multioutput_size_bound(k: int, n: int, size: int) -> int:
    """Returns C k 2^k n^3 N for an input FBDD of size N."""
    return MULTIOUTPUT_SIZE_CONSTANT * k * 2 ** k * n ** 3 * size


def check_computes(
        f: Diagram, lineage: CompositeLineage, variables: Sequence[VarId],
        seed: int = 0) -> Optional[Assignment]:
    """Compares a single-output diagram against a lineage.

    Small variable sets are checked exhaustively, larger ones on
    random assignments.

    Returns:
        An assignment on which they differ, or None.
    """
    variables = list(variables)
    if len(variables) <= EXHAUSTIVE_CHECK_LIMIT:
        diff = evaluation_mask(f, variables)[0] != lineage_mask(
                lineage, variables)
        hits = np.flatnonzero(diff)
        if hits.shape[0] == 0:
            return None
        x = int(hits[0])
        return Assignment(
                (var, bool((x >> i) & 1)) for i, var in enumerate(variables))

    rng = np.random.default_rng(seed)
    samples = rng.integers(0, 2, size=(RANDOM_CHECK_SAMPLES, len(variables)))
    for row in samples:
        theta = Assignment(zip(variables, (bool(b) for b in row)))
        if evaluate(f, theta)[0] != lineage.evaluate(theta):
            return theta
    return None


class _Region:
    """Per-node data of the input FBDD."""
    def __init__(
            self, theta: Assignment, residuals: List[MonotoneDNF],
            transversals: TransversalSet) -> None:
        self.theta = theta
        self.residuals = residuals
        self.transversals = transversals
        self.hk_units: FrozenSet[VarId] = frozenset()

    @property
    def t(self) -> int:
        return self.transversals.max_independent


class MultiOutputConverter:
    """Converts an FBDD for f(H_k0, ..., H_kk) to one for the family.

    Args:
        f: A single-output FBDD for the grounded query.
        comb: The combinator f, which must depend on all arguments.
        k: Query parameter.
        n: Domain size.
        t_cap: Largest number of transversals a family OBDD may branch
                on.
    """
    def __init__(
            self, f: Diagram, comb: CombinatorFn, k: int, n: int,
            t_cap: int = DEFAULT_T_CAP) -> None:
        for ell in range(k + 1):
            if not comb.depends_on(ell)[0]:
                raise NotFullyDependent(
                        'The combinator does not depend on argument {}'.format(
                            ell))
        report = validate(f)
        if report.diagram_class != DiagramClass.FBDD or f.outputs != 1:
            raise InvalidDiagram('Expected a single-output FBDD, got {}'.format(
                report.describe()))
        self._f = remove_noops(f)
        self._comb = comb
        self._k = k
        self._n = n
        self._family = ground_hk_family(k, n)
        self._builder = DiagramBuilder(k + 1)
        self._obdds = FamilyObddBuilder(
                k, n, self._builder, t_cap, self._family)
        self._full = range(k + 1)
        self._regions: List[_Region] = list()
        self._new: Dict[int, int] = dict()

    def check_function(self) -> None:
        """Verifies that the FBDD computes the grounded query.

        Raises:
            WrongFunction: If it does not.
        """
        lineage = ground_query(self._comb, self._k, self._n)
        variables = grounded_variables(self._k, self._n)
        witness = check_computes(self._f, lineage, variables)
        if witness is not None:
            raise WrongFunction(
                    'The diagram differs from the query on {!r}'.format(witness))

    def convert(self) -> Diagram:
        """Runs the conversion.

        Returns:
            A multi-output FBDD with k+1 outputs, output ell computing
            H_k,ell.
        """
        self.check_function()
        self._find_regions()
        f = self._f
        root_region = self._regions[f.root]
        if root_region.t < 4:
            _logger.info('Root has {} independent transversals, using one'
                         ' family OBDD'.format(root_region.t))
            root = self._obdds.build(Assignment(), self._full)
        else:
            for index in range(len(f.nodes)):
                if self._in_v4(index):
                    self._new[index] = self._convert_node(index)
            root = self._chain(
                    Assignment(), sorted(root_region.hk_units),
                    self._new[f.root])
        result = remove_noops(self._builder.build(
            root, grounded_variables(self._k, self._n)))
        _logger.info('Converted an FBDD of {} nodes into a multi-output FBDD'
                     ' of {} nodes'.format(len(f), len(result)))
        return result

    def _in_v4(self, index: int) -> bool:
        return (
                self._f.nodes[index].kind != NodeKind.SINK and
                self._regions[index].t >= 4)

    def _find_regions(self) -> None:
        """Picks representatives top-down, preferring more transversals.

        A node reachable along several paths takes the path whose
        restriction has the most independent transversals, so that a
        node is in V4 if any of its paths puts it there.
        """
        f = self._f
        candidates: List[List[Assignment]] = [list() for _ in f.nodes]
        candidates[f.root].append(Assignment())
        regions: List[Optional[_Region]] = [None] * len(f.nodes)
        for index in range(f.root, -1, -1):
            best: Optional[_Region] = None
            for theta in candidates[index]:
                residuals = residual_family(theta, self._k, self._n, self._family)
                region = _Region(
                        theta, residuals,
                        transversals_of(residuals, self._k, self._n))
                if best is None or region.t > best.t:
                    best = region
            assert best is not None
            candidates[index] = list()
            if best.t >= 4:
                best.hk_units = hk_units_of(
                        best.residuals, self._k, self._n, best.transversals)
            regions[index] = best
            node = f.nodes[index]
            if node.kind == NodeKind.DECISION:
                assert node.var is not None
                for value, child in enumerate(node.children):
                    candidates[child].append(
                            best.theta.extended(node.var, bool(value)))
        assert all(r is not None for r in regions)
        self._regions = cast(List[_Region], regions)

    def _convert_node(self, index: int) -> int:
        node = self._f.nodes[index]
        assert node.var is not None
        region = self._regions[index]
        lo, hi = node.children
        if node.var in region.hk_units:
            # known to be 0 on every path into the copy
            return self._edge(index, False, lo)
        return self._builder.decision(
                node.var, self._edge(index, False, lo), self._edge(index, True, hi))

    def _edge(self, index: int, value: bool, child: int) -> int:
        region = self._regions[index]
        base = region.theta.set_all(region.hk_units, False)
        var = self._f.nodes[index].var
        assert var is not None
        if var not in region.hk_units:
            base = base.extended(var, value)
        if not self._in_v4(child):
            return self._obdds.build(base, self._full)
        new_units = sorted(self._regions[child].hk_units - region.hk_units)
        return self._chain(base, new_units, self._new[child])

    def _chain(self, base: Assignment, new_units: Sequence[VarId],
               target: int) -> int:
        """Tests new H_k-units in order; setting one to 1 exits to an OBDD."""
        exits: List[Tuple[VarId, int]] = list()
        for i, unit in enumerate(new_units):
            theta = base.set_all(new_units[:i], False).extended(unit, True)
            exits.append((unit, self._obdds.build(theta, self._full)))
        node = target
        for unit, exit_node in reversed(exits):
            node = self._builder.decision(unit, node, exit_node)
        return node


def fbdd_to_multioutput(
        f: Diagram, comb: CombinatorFn, k: int, n: int,
        t_cap: int = DEFAULT_T_CAP) -> Diagram:
    """Converts an FBDD for comb(H_k0, ..., H_kk) into a multi-output FBDD.

    Args:
        f: A single-output FBDD computing the grounded query.
        comb: A combinator depending on all of its k+1 arguments.
        k: Query parameter.
        n: Domain size.
        t_cap: Largest number of transversals to branch on in the
                attached family OBDDs.

    Returns:
        A multi-output FBDD computing (H_k0, ..., H_kk).

    Raises:
        NotFullyDependent: If comb ignores an argument.
        WrongFunction: If f does not compute the grounded query.
        InvalidDiagram: If f is not a single-output FBDD.
    """
    return MultiOutputConverter(f, comb, k, n, t_cap).convert()
