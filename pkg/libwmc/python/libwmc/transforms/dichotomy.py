"""Classification and constructions for Q = g(h_k0, ..., h_kk, b_0, ..., b_k+1).

If g(X, 1) depends on all of X_0..X_k, the query is hard: restricting a
diagram for Q over [n+2] by padding_assignment yields one for
g(X, 1)(h_k0, ..., h_kk) over [n]. Otherwise a polynomial-size FBDD
exists, built by build_dichotomy_fbdd.
"""
from dataclasses import dataclass
import logging
from typing import List, Optional, Tuple

from libwmc.diagrams.diagram import Diagram, DiagramBuilder
from libwmc.diagrams.operations import restrict_diagram
from libwmc.errors import Refused
from libwmc.lineage.combinator import CombinatorFn, project_g_at_ones
from libwmc.lineage.grounding import grounded_variables
from libwmc.transforms.family_obdd import DEFAULT_T_CAP, FamilyObddBuilder
from libwmc.variables import Assignment, VarId


_logger = logging.getLogger(__name__)

DICHOTOMY_SIZE_CONSTANT = 256


@dataclass(frozen=True)
class Classification:
    """Outcome of classify_dichotomy.

    Attributes:
        hard: Whether every FBDD for the query is exponential.
        missing: For easy queries, an index s such that g(X, 1) does
                not depend on X_s.
    """
    hard: bool
    missing: Optional[int] = None

    def __str__(self) -> str:
        if self.hard:
            return 'Hard'
        return 'Easy(s={})'.format(self.missing)


def classify_dichotomy(g: CombinatorFn, k: int) -> Classification:
    """Decides on which side of the dichotomy a query falls.

    Args:
        g: A combinator of arity 2k+3.
        k: The query parameter.

    Raises:
        ValueError: If the arity of g is not 2k+3.
    """
    f = project_g_at_ones(g, k)
    for ell in range(k + 1):
        if not f.depends_on(ell)[0]:
            return Classification(False, ell)
    return Classification(True)


def dichotomy_size_bound(k: int, n: int) -> int:
    return DICHOTOMY_SIZE_CONSTANT * n ** (2 * k + 2)


def padding_assignment(k: int, n: int) -> Assignment:
    """Fixes the two extra domain elements n+1 and n+2.

    Under this assignment every b_ell is true, while every h_k,ell loses
    all terms involving n+1 or n+2, so the lineage over [n+2] becomes
    the lineage of g(X, 1) over [n].
    """
    n1, n2 = n + 1, n + 2
    bindings = [
            (VarId.r(n1), True), (VarId.r(n2), False),
            (VarId.t(n1), k % 2 == 1), (VarId.t(n2), k % 2 == 0)]
    for ell in range(1, k + 1):
        for i in range(1, n2 + 1):
            for j in range(1, n2 + 1):
                if i <= n and j <= n:
                    continue
                if (i, j) == (n2, n2):
                    value = ell % 2 == 1
                elif (i, j) == (n1, n1):
                    value = ell % 2 == 0
                else:
                    value = False
                bindings.append((VarId.s(ell, i, j), value))
    return Assignment(bindings)


def reduce_padded_diagram(d: Diagram, k: int, n: int) -> Diagram:
    """Turns a diagram for Q over [n+2] into one for g(X, 1) over [n].

    Tested padding variables become NoOps, so the size is unchanged.
    """
    return restrict_diagram(d, padding_assignment(k, n))


def _blocks(k: int, n: int) -> List[List[VarId]]:
    blocks = [[VarId.r(i) for i in range(1, n + 1)]]
    for ell in range(1, k + 1):
        blocks.append([
            VarId.s(ell, i, j)
            for i in range(1, n + 1) for j in range(1, n + 1)])
    blocks.append([VarId.t(j) for j in range(1, n + 1)])
    return blocks


class DichotomyFbddBuilder:
    """Builds the layered FBDD for an easy dichotomy query.

    Layers 0 to k+1 form a tree that finds out b_0, ..., b_k+1 one after
    the other: a block of variables is tested in order, every 1-edge
    starts a fresh subtree for the next block, and so does the 0-edge of
    the last test. The leaves are family OBDDs for the restriction
    reached, combined by g with the b values filled in.

    Attributes:
        layers: Number of layers, k+3.
    """
    def __init__(self, g: CombinatorFn, k: int, n: int,
                 t_cap: int = DEFAULT_T_CAP) -> None:
        cls = classify_dichotomy(g, k)
        if cls.hard:
            raise Refused(
                    'g(X, 1) depends on all arguments, so every FBDD for this'
                    ' query has exponential size')
        self._g = g
        self._k = k
        self._n = n
        self._blocks = _blocks(k, n)
        self._builder = DiagramBuilder(1)
        self._obdds = FamilyObddBuilder(k, n, self._builder, t_cap)
        self.layers = len(self._blocks) + 1
        self.leaves = 0

    def build(self) -> Diagram:
        root = self._layer(0, Assignment(), ())
        result = self._builder.build(
                root, grounded_variables(self._k, self._n))
        _logger.info('Dichotomy FBDD for n = {} has {} nodes, {} leaves'.format(
            self._n, len(result), self.leaves))
        return result

    def _layer(self, depth: int, theta: Assignment,
               b_values: Tuple[bool, ...]) -> int:
        if depth == len(self._blocks):
            return self._leaf(theta, b_values)
        block = self._blocks[depth]
        node = self._layer(
                depth + 1, theta.set_all(block, False), b_values + (False,))
        for p in range(len(block) - 1, -1, -1):
            hit = theta.set_all(block[:p], False).extended(block[p], True)
            hi = self._layer(depth + 1, hit, b_values + (True,))
            node = self._builder.decision(block[p], node, hi)
        return node

    def _leaf(self, theta: Assignment, b_values: Tuple[bool, ...]) -> int:
        self.leaves += 1
        combine = self._g
        for pos in range(2 * self._k + 2, self._k, -1):
            combine = combine.curry(pos, b_values[pos - self._k - 1])
        value = combine.constant_value()
        if value is not None:
            return self._builder.constant(value)
        return self._obdds.build(theta, combine.dependent_arguments(), combine)


def build_dichotomy_fbdd(
        g: CombinatorFn, k: int, n: int, t_cap: int = DEFAULT_T_CAP
        ) -> Diagram:
    """Builds a polynomial-size FBDD for an easy dichotomy query.

    Raises:
        Refused: If the query is on the hard side.
    """
    return DichotomyFbddBuilder(g, k, n, t_cap).build()
