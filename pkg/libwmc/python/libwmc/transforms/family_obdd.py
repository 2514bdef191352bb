"""Multi-output OBDDs for transversal-free restrictions of the H_k family.

Without transversals, no chain R(i) - S_1(i,j) - ... - S_k(i,j) - T(j)
survives, so the variables connected to an R can be read row by row
and those connected to a T column by column. Along that order, the
state of each H_k,ell only depends on a few recently read values, so
the width of the diagram stays below 2^(k+3) per variable.
"""
from collections import Counter
import logging
from typing import (
        Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional,
        Sequence, Tuple, Union)

from libwmc.diagrams.diagram import Diagram, DiagramBuilder
from libwmc.errors import NotTransversalFree
from libwmc.formula import MonotoneDNF, restrict, variable_groups
from libwmc.lineage.combinator import CombinatorFn
from libwmc.lineage.composite import CompositeLineage
from libwmc.lineage.grounding import ground_hk_family
from libwmc.transforms.transversals import TransversalSet, transversals_of
from libwmc.variables import Relation, VarId


_logger = logging.getLogger(__name__)

DEFAULT_T_CAP = 8

# Asserted bound on the size of one OBDD: C k 2^(k+t) n^2
FAMILY_OBDD_SIZE_CONSTANT = 64

State = Tuple[MonotoneDNF, ...]


def family_obdd_size_bound(k: int, n: int, t: int) -> int:
    return FAMILY_OBDD_SIZE_CONSTANT * k * 2 ** (k + t) * n * n


def variable_order(residuals: Iterable[MonotoneDNF]) -> Dict[VarId, int]:
    """Computes the read order for a transversal-free family.

    Components of the co-occurrence graph that contain an R, and those
    that contain only S variables, are read in row-major order. The
    ones containing a T come after, in column-major order with T(j)
    ahead of the S variables of column j.

    Returns:
        The position of each variable in the order.

    Raises:
        NotTransversalFree: If a component contains both an R and a T.
    """
    terms = [t for h in residuals if not h.is_constant() for t in h.terms]
    keyed = list()
    for group in variable_groups(terms):
        has_r = any(v.kind == Relation.R for v in group)
        has_t = any(v.kind == Relation.T for v in group)
        if has_r and has_t:
            raise NotTransversalFree(
                    'R and T variables are connected, cannot order')
        for var in group:
            if has_t:
                if var.kind == Relation.T:
                    key = (1, var.j, 0, 0, 0)
                else:
                    key = (1, var.j, 1, var.i, var.ell)
            elif var.kind == Relation.R:
                key = (0, var.i, 0, 0, 0)
            else:
                key = (0, var.i, 1, var.j, var.ell)
            keyed.append((key, var))
    keyed.sort()
    return {var: pos for pos, (_, var) in enumerate(keyed)}


class _Frame:
    def __init__(
            self, key: Hashable, var: VarId, children: List[State]) -> None:
        self.key = key
        self.var = var
        self.children = children
        self.results: List[int] = list()


class FamilyObddBuilder:
    """Builds OBDDs for restrictions of the H_k family.

    All OBDDs are built into one DiagramBuilder, and share nodes for
    equal residual states, so many of them can be attached to a larger
    diagram cheaply.

    If the builder has k+1 outputs, sinks carry the values of
    H_k0..H_kk. If it has one output, a combinator must be given to
    each build call, and sinks carry its value; sinks are then emitted
    as soon as that value is determined.

    Attributes:
        level_widths: Per variable, the number of nodes the last build
                call created testing it.
        last_t: Number of independent transversals at the start of the
                last build call.
    """
    def __init__(
            self, k: int, n: int, builder: DiagramBuilder,
            t_cap: int = DEFAULT_T_CAP,
            family: Optional[Sequence[MonotoneDNF]] = None) -> None:
        self._k = k
        self._n = n
        self._builder = builder
        self._t_cap = t_cap
        self._family = list(family) if family is not None else (
                ground_hk_family(k, n))
        self._memo: Dict[Hashable, int] = dict()
        self.level_widths: Counter = Counter()
        self.last_t = 0

    def build(
            self, theta: Mapping[VarId, bool], subset: Iterable[int],
            combine: Optional[CombinatorFn] = None) -> int:
        """Builds an OBDD for the family restricted by theta.

        Args:
            theta: The restriction.
            subset: Indices of the outputs to compute; the others are
                    constant 0.
            combine: For single-output builders, the combinator of
                    arity k+1 to apply to the outputs.

        Returns:
            The index of the root node in the builder.

        Raises:
            NotTransversalFree: If theta has more independent
                    transversals than the cap allows.
        """
        members = frozenset(subset)
        if combine is None and self._builder.outputs != len(self._family):
            raise ValueError('A single-output build needs a combinator')
        residuals = tuple(
                restrict(h, theta) if ell in members else MonotoneDNF.false()
                for ell, h in enumerate(self._family))
        self.level_widths = Counter()
        transversals = transversals_of(residuals, self._k, self._n)
        self.last_t = transversals.max_independent
        if transversals:
            if transversals.max_independent > self._t_cap:
                raise NotTransversalFree(
                        '{} independent transversals exceed the cap of {}'.format(
                            transversals.max_independent, self._t_cap))
            return self._branch(residuals, transversals, combine)
        return self._obdd(residuals, combine)

    def _branch(
            self, residuals: State, transversals: TransversalSet,
            combine: Optional[CombinatorFn]) -> int:
        """Tests the vertex cover of the transversals, then builds OBDDs."""
        cover = sorted(
                [VarId.r(i) for i in transversals.cover_rows] +
                [VarId.t(j) for j in transversals.cover_cols])
        _logger.debug('Branching on {} to remove transversals'.format(
            ', '.join(str(v) for v in cover)))

        def tree(depth: int, state: State) -> int:
            if depth == len(cover):
                if transversals_of(state, self._k, self._n):
                    raise NotTransversalFree(
                            'Transversals left after branching on the cover')
                return self._obdd(state, combine)
            var = cover[depth]
            lo = tree(depth + 1, tuple(restrict(h, {var: False}) for h in state))
            hi = tree(depth + 1, tuple(restrict(h, {var: True}) for h in state))
            return self._builder.decision(var, lo, hi)

        return tree(0, residuals)

    def _sink_or_key(
            self, state: State, combine: Optional[CombinatorFn]
            ) -> Tuple[Optional[int], Hashable]:
        if combine is None:
            if all(h.is_constant() for h in state):
                return self._builder.sink([h.is_true() for h in state]), None
            return None, state
        composite = CompositeLineage(combine, state)
        value = composite.constant_value()
        if value is not None:
            return self._builder.sink([value]), None
        return None, composite.cache_key()

    def _obdd(self, start: State, combine: Optional[CombinatorFn]) -> int:
        order = variable_order(start)

        def expand(state: State) -> Union[int, _Frame]:
            sink, key = self._sink_or_key(state, combine)
            if sink is not None:
                return sink
            if key in self._memo:
                return self._memo[key]
            var = min(
                    (v for h in state for v in h.variables()),
                    key=order.__getitem__)
            self.level_widths[var] += 1
            return _Frame(key, var, [
                tuple(restrict(h, {var: value}) for h in state)
                for value in (False, True)])

        item = expand(start)
        if isinstance(item, int):
            return item
        stack = [item]
        while True:
            frame = stack[-1]
            if len(frame.results) < 2:
                item = expand(frame.children[len(frame.results)])
                if isinstance(item, int):
                    frame.results.append(item)
                else:
                    stack.append(item)
                continue
            node = self._builder.decision(frame.var, *frame.results)
            self._memo[frame.key] = node
            stack.pop()
            if not stack:
                return node
            stack[-1].results.append(node)


def residual_variables(
        theta: Mapping[VarId, bool], subset: FrozenSet[int],
        family: Sequence[MonotoneDNF]) -> FrozenSet[VarId]:
    return frozenset().union(*(
        restrict(h, theta).variables()
        for ell, h in enumerate(family) if ell in subset))


def build_family_obdd(
        theta: Mapping[VarId, bool], subset: Iterable[int], k: int, n: int,
        combine: Optional[CombinatorFn] = None,
        t_cap: int = DEFAULT_T_CAP, budget: Optional[int] = None
        ) -> Diagram:
    """Builds a stand-alone OBDD for (H_k0[theta], ..., H_kk[theta]).

    Args:
        theta: The restriction.
        subset: Indices of the outputs to compute; others are 0.
        k: Query parameter.
        n: Domain size.
        combine: If given, the diagram has a single output, the value
                of this combinator applied to the outputs.
        t_cap: Largest number of independent transversals to branch on.
        budget: Maximum number of nodes.

    Returns:
        A multi-output (or, with combine, single-output) FBDD.

    Raises:
        NotTransversalFree: If theta has too many transversals.
    """
    members = frozenset(subset)
    family = ground_hk_family(k, n)
    builder = DiagramBuilder(1 if combine is not None else k + 1, budget)
    fob = FamilyObddBuilder(k, n, builder, t_cap, family)
    root = fob.build(theta, members, combine)
    diagram = builder.build(root, residual_variables(theta, members, family))
    _logger.debug('Family OBDD for subset {} has {} nodes'.format(
        sorted(members), len(diagram)))
    return diagram
