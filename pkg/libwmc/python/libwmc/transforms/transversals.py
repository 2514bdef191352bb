from dataclasses import dataclass, field
from typing import FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from libwmc.formula import MonotoneDNF, restrict, units
from libwmc.lineage.grounding import ground_hk_family, hk_term
from libwmc.variables import VarId


Pair = Tuple[int, int]


@dataclass(frozen=True)
class TransversalSet:
    """The transversals of a restriction of the H_k family.

    Attributes:
        pairs: The index pairs (i, j) whose 2-terms survive in every
                H_k,ell.
        max_independent: Size of the largest subset of pairs with
                pairwise distinct rows and columns.
        cover_rows: Rows of a minimum vertex cover of the pairs.
        cover_cols: Columns of that cover. Together, the cover has
                max_independent elements and touches every pair.
    """
    pairs: FrozenSet[Pair] = frozenset()
    max_independent: int = 0
    cover_rows: FrozenSet[int] = field(default_factory=frozenset)
    cover_cols: FrozenSet[int] = field(default_factory=frozenset)

    def __bool__(self) -> bool:
        return bool(self.pairs)


def residual_family(
        theta: Mapping[VarId, bool], k: int, n: int,
        family: Optional[Sequence[MonotoneDNF]] = None) -> List[MonotoneDNF]:
    """Returns H_k0[theta], ..., H_kk[theta]."""
    if family is None:
        family = ground_hk_family(k, n)
    return [restrict(h, theta) for h in family]


def transversals_of(
        residuals: Sequence[MonotoneDNF], k: int, n: int) -> TransversalSet:
    """Finds the transversals of an already restricted family.

    A pair (i, j) is a transversal if, for every ell, the (i, j) term
    of H_k,ell is still a term (and so a prime implicant) of the
    restricted formula.
    """
    candidates: Optional[Set[Pair]] = None
    for ell, h in enumerate(residuals):
        if h.is_constant():
            return TransversalSet()
        present = {
                (i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                if (candidates is None or (i, j) in candidates) and
                frozenset(hk_term(k, ell, i, j)) in h.terms}
        candidates = present
        if not candidates:
            return TransversalSet()
    assert candidates is not None
    return _with_matching(frozenset(candidates))


def _with_matching(pairs: FrozenSet[Pair]) -> TransversalSet:
    graph = nx.Graph()
    rows = {('row', i) for i, _ in pairs}
    graph.add_nodes_from(rows)
    graph.add_edges_from((('row', i), ('col', j)) for i, j in pairs)
    matching = nx.bipartite.maximum_matching(graph, top_nodes=rows)
    cover = nx.bipartite.to_vertex_cover(graph, matching, top_nodes=rows)
    return TransversalSet(
            pairs, len(matching) // 2,
            frozenset(i for side, i in cover if side == 'row'),
            frozenset(j for side, j in cover if side == 'col'))


def find_transversals(
        theta: Mapping[VarId, bool], k: int, n: int) -> TransversalSet:
    """Finds the transversals of theta for the H_k family over [n]."""
    return transversals_of(residual_family(theta, k, n), k, n)


def hk_units_of(
        residuals: Sequence[MonotoneDNF], k: int, n: int,
        transversals: Optional[TransversalSet] = None) -> FrozenSet[VarId]:
    """Computes the H_k-units of an already restricted family.

    With at least 4 independent transversals, these are the units of
    the individual H_k,ell. Otherwise, a variable is an H_k-unit if
    setting it to 1 removes all transversals while there were some.
    """
    if transversals is None:
        transversals = transversals_of(residuals, k, n)
    if transversals.max_independent >= 4:
        result: Set[VarId] = set()
        for h in residuals:
            if not h.is_constant():
                result |= units(h)
        return frozenset(result)
    return definitional_hk_units(residuals, k, n, transversals)


def definitional_hk_units(
        residuals: Sequence[MonotoneDNF], k: int, n: int,
        transversals: Optional[TransversalSet] = None) -> FrozenSet[VarId]:
    """Computes H_k-units by trying every variable."""
    if transversals is None:
        transversals = transversals_of(residuals, k, n)
    if not transversals:
        return frozenset()
    candidates = frozenset().union(*(h.variables() for h in residuals))
    return frozenset(
            var for var in candidates
            if not transversals_of(
                [restrict(h, {var: True}) for h in residuals], k, n))


def hk_units(theta: Mapping[VarId, bool], k: int, n: int) -> FrozenSet[VarId]:
    """Returns the H_k-units of the restriction of the family by theta."""
    return hk_units_of(residual_family(theta, k, n), k, n)
