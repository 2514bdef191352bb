from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
import logging
import time
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple, Union

import numpy as np

from libwmc.compiler.config import CompileConfig, Heuristic, NegationMode
from libwmc.diagrams.diagram import Diagram, DiagramBuilder, NodeKind
from libwmc.errors import BudgetExhausted
from libwmc.formula import MonotoneDNF, Term, variable_groups
from libwmc.lineage.combinator import CombinatorFn
from libwmc.lineage.composite import CompositeLineage, single
from libwmc.variables import VarId


_logger = logging.getLogger(__name__)

# Above this many split arguments, the decomposition check is skipped.
MAX_SPLIT_ARITY = 16


@dataclass
class CompileStats:
    """Counters collected during one compilation.

    Attributes:
        nodes_created: Nodes added to the trace, sinks included.
        cache_hits: Residuals found in the cache.
        cache_misses: Residuals compiled from scratch.
        decisions: Shannon expansions performed.
        component_splits: Decompositions into independent parts.
        elapsed: Wall-clock time in seconds.
    """
    nodes_created: int = 0
    cache_hits: int = 0
    cache_misses: int = 0
    decisions: int = 0
    component_splits: int = 0
    elapsed: float = 0.0


class SplitKind(Enum):
    AND = 'and'
    OR = 'or'
    XOR = 'xor'
    DROP = 'drop'


@dataclass
class Split:
    """A decomposition of a residual into variable-disjoint parts.

    For DROP, the residual equals left; otherwise it is
    left <kind> right.
    """
    kind: SplitKind
    left: CompositeLineage
    right: Optional[CompositeLineage] = None


class ComponentIndex:
    """Connected variable groups of residuals, by their live arguments.

    The groups of the two parts of a split are recorded when it is
    made, so that they are not searched for again.
    """
    def __init__(self) -> None:
        self._groups: Dict[
                Tuple[MonotoneDNF, ...], List[FrozenSet[VarId]]] = dict()

    def groups(self, args: Tuple[MonotoneDNF, ...]) -> List[FrozenSet[VarId]]:
        """Returns the groups of the terms of args, sorted by minimum."""
        groups = self._groups.get(args)
        if groups is None:
            groups = variable_groups(t for arg in args for t in arg.terms)
            self._groups[args] = groups
        return groups

    def record(
            self, part: CompositeLineage, args: Tuple[MonotoneDNF, ...],
            groups: List[FrozenSet[VarId]]) -> None:
        """Records the groups of a part built from args.

        If the part's residual dropped some of args, its groups may be
        finer, and nothing is recorded.
        """
        if part.live_arguments() == args:
            self._groups[args] = groups

    def __len__(self) -> int:
        return len(self._groups)


def find_split(
        psi: CompositeLineage, index: Optional[ComponentIndex] = None
        ) -> Optional[Split]:
    """Looks for a decomposition of psi along its variable components.

    The live arguments' terms are grouped into connected components.
    For each component in turn, every argument A is split into the part
    A' inside the component and the part A'' outside of it, and the
    combinator is viewed as a function F(Y', Y'') = f(Y' v Y''). If F
    is a function of one side only, or has the form a(Y') op b(Y'')
    with op one of and, or, xor, the corresponding split is returned.

    Args:
        psi: The residual to decompose.
        index: Groups found earlier, which is updated with the groups
                of the parts.

    Returns:
        The first decomposition found, or None.
    """
    fn, live = psi.residual()
    args = tuple(psi.arguments[i] for i in live)
    components = index if index is not None else ComponentIndex()
    groups = components.groups(args)
    if len(groups) < 2:
        return None

    for group in groups:
        inside: List[List[Term]] = [list() for _ in args]
        outside: List[List[Term]] = [list() for _ in args]
        for pos, arg in enumerate(args):
            for term in arg.terms:
                if next(iter(term)) in group:
                    inside[pos].append(term)
                else:
                    outside[pos].append(term)
        side1 = [pos for pos in range(len(args)) if inside[pos]]
        side2 = [pos for pos in range(len(args)) if outside[pos]]
        if len(side1) + len(side2) > MAX_SPLIT_ARITY:
            continue

        y1 = np.arange(2 ** len(side1))[:, None]
        y2 = np.arange(2 ** len(side2))[None, :]
        code = np.zeros((y1.shape[0], y2.shape[1]), dtype=np.int64)
        for bit, pos in enumerate(side1):
            code |= ((y1 >> bit) & 1) << pos
        for bit, pos in enumerate(side2):
            code |= ((y2 >> bit) & 1) << pos
        matrix = fn.table[code]
        others = [g for g in groups if g is not group]

        def part(table: np.ndarray, side: List[int], terms: List[List[Term]],
                 part_groups: List[FrozenSet[VarId]]) -> CompositeLineage:
            part_args = tuple(
                    MonotoneDNF(terms[pos], _minimal=True) for pos in side)
            result = CompositeLineage(CombinatorFn(len(side), table), part_args)
            components.record(result, part_args, part_groups)
            return result

        if (matrix == matrix[:, :1]).all():
            return Split(
                    SplitKind.DROP, part(matrix[:, 0], side1, inside, [group]))
        if (matrix == matrix[:1, :]).all():
            return Split(
                    SplitKind.DROP, part(matrix[0, :], side2, outside, others))

        rows = np.unique(matrix, axis=0)
        if rows.shape[0] != 2:
            continue
        u, v = rows[0], rows[1]
        if not u.any() or not v.any():
            kind, marked, other = SplitKind.AND, (v if not u.any() else u), None
        elif u.all() or v.all():
            kind, marked = SplitKind.OR, (u if u.all() else v)
            other = v if u.all() else u
        elif (u == ~v).all():
            kind, marked, other = SplitKind.XOR, u, v
        else:
            continue
        if other is None:
            other = marked
        a_table = (matrix == marked[None, :]).all(axis=1)
        return Split(
                kind, part(a_table, side1, inside, [group]),
                part(other, side2, outside, others))
    return None


def choose_variable(psi: CompositeLineage, heuristic: Heuristic) -> VarId:
    """Picks a branching variable; ties go to the lowest VarId."""
    if heuristic == Heuristic.FIRST_UNSET:
        return min(psi.variables())
    counts: Counter = Counter()
    for arg in psi.live_arguments():
        for term in arg.terms:
            counts.update(term)
    return min(counts, key=lambda var: (-counts[var], var))


class _Frame:
    """A residual whose children are being compiled."""
    def __init__(
            self, key: Hashable, plan: Union[VarId, SplitKind],
            children: List[CompositeLineage]) -> None:
        self.key = key
        self.plan = plan
        self.children = children
        self.results: List[int] = list()


class Compiler:
    """A DPLL-style model counter that records its trace as a diagram.

    Each residual is canonicalized, looked up in the cache, and then
    either turned into a sink, split into independent parts, or
    expanded on a variable. The resulting diagram is a DLDD, or an FBDD
    if decomposition is switched off.

    One Compiler owns one cache, so a single instance must not be used
    by multiple threads at once.
    """
    def __init__(self, cfg: CompileConfig = CompileConfig()) -> None:
        self._cfg = cfg
        self._cache: Dict[Hashable, int] = dict()
        self._builder = DiagramBuilder(1, cfg.budget)
        self._stats = CompileStats()
        self._components = ComponentIndex()

    def compile(
            self, psi: Union[CompositeLineage, MonotoneDNF]
            ) -> Tuple[Diagram, CompileStats]:
        """Compiles a lineage.

        Args:
            psi: The lineage to compile.

        Returns:
            The trace diagram and the statistics.

        Raises:
            BudgetExhausted: If the node budget runs out, carrying the
                    statistics collected so far.
        """
        if isinstance(psi, MonotoneDNF):
            psi = single(psi)
        self._cache = dict()
        self._builder = DiagramBuilder(1, self._cfg.budget)
        self._stats = CompileStats()
        self._components = ComponentIndex()
        start = time.perf_counter()
        _logger.info('Compiling lineage over {} variables with {}'.format(
            len(psi.variables()), self._cfg))
        try:
            root = self._run(psi)
        except BudgetExhausted as e:
            self._stats.nodes_created = len(self._builder)
            self._stats.elapsed = time.perf_counter() - start
            _logger.warning('Budget exhausted after {} nodes'.format(
                self._stats.nodes_created))
            raise BudgetExhausted(str(e), self._stats)
        self._stats.nodes_created = len(self._builder)
        self._stats.elapsed = time.perf_counter() - start
        diagram = self._builder.build(root, psi.variables())
        _logger.info('Compiled to {} nodes, {} cache hits'.format(
            len(diagram), self._stats.cache_hits))
        return diagram, self._stats

    def _run(self, psi: CompositeLineage) -> int:
        item = self._expand(psi)
        if isinstance(item, int):
            return item
        stack = [item]
        while True:
            frame = stack[-1]
            if len(frame.results) < len(frame.children):
                item = self._expand(frame.children[len(frame.results)])
                if isinstance(item, int):
                    frame.results.append(item)
                else:
                    stack.append(item)
                continue
            node = self._finish(frame)
            stack.pop()
            if not stack:
                return node
            stack[-1].results.append(node)

    def _expand(self, psi: CompositeLineage) -> Union[int, _Frame]:
        value = psi.constant_value()
        if value is not None:
            return self._builder.constant(value)
        key = psi.cache_key()
        if self._cfg.cache:
            if key in self._cache:
                self._stats.cache_hits += 1
                return self._cache[key]
            self._stats.cache_misses += 1

        split = (
                find_split(psi, self._components) if self._cfg.decompose
                else None)
        if split is not None:
            if split.kind == SplitKind.DROP:
                return _Frame(key, split.kind, [split.left])
            assert split.right is not None
            self._stats.component_splits += 1
            if (split.kind == SplitKind.OR and
                    self._cfg.negation_mode == NegationMode.NEGATE_TO_CNF):
                return _Frame(key, split.kind, [
                    _negated(split.left), _negated(split.right)])
            return _Frame(key, split.kind, [split.left, split.right])

        var = choose_variable(psi, self._cfg.heuristic)
        return _Frame(key, var, [
            psi.restrict({var: False}), psi.restrict({var: True})])

    def _finish(self, frame: _Frame) -> int:
        builder = self._builder
        plan, results = frame.plan, frame.results
        if isinstance(plan, VarId):
            self._stats.decisions += 1
            node = builder.decision(plan, results[0], results[1])
        elif plan == SplitKind.DROP:
            node = results[0]
        elif plan == SplitKind.AND:
            node = builder.combine(NodeKind.AND, results[0], results[1])
        elif plan == SplitKind.XOR:
            node = builder.combine(NodeKind.XOR, results[0], results[1])
        elif self._cfg.negation_mode == NegationMode.NEGATE_TO_CNF:
            node = builder.negate(
                    builder.combine(NodeKind.AND, results[0], results[1]))
        else:
            node = builder.combine(NodeKind.OR, results[0], results[1])
        if self._cfg.cache:
            self._cache[frame.key] = node
        return node


def _negated(psi: CompositeLineage) -> CompositeLineage:
    return CompositeLineage(psi.combinator.negated(), psi.arguments)


def compile(
        psi: Union[CompositeLineage, MonotoneDNF],
        cfg: CompileConfig = CompileConfig()
        ) -> Tuple[Diagram, CompileStats]:
    """Compiles a lineage with a fresh compiler; see Compiler.compile."""
    return Compiler(cfg).compile(psi)
