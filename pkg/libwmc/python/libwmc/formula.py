import logging
from typing import (
        Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple)

from networkx.utils import UnionFind

from libwmc.errors import ConstantFormula, UnboundVariable
from libwmc.variables import VarId


_logger = logging.getLogger(__name__)


Term = FrozenSet[VarId]


class MonotoneDNF:
    """A monotone formula in disjunctive normal form.

    The formula is a set of terms, each a set of positive variables. It
    is kept minimized: no term is a superset of another one. The empty
    term set is the constant false, a term set containing the empty
    term is the constant true.

    Instances are immutable and hashable, and equal iff their minimized
    term sets are equal.
    """
    __slots__ = ('_terms', '_hash', '_variables')

    def __init__(
            self, terms: Iterable[Iterable[VarId]] = (),
            _minimal: bool = False) -> None:
        """Create a MonotoneDNF.

        Args:
            terms: The terms, as iterables of variables.
        """
        term_set = frozenset(frozenset(t) for t in terms)
        if not _minimal:
            term_set = _minimize(term_set)
        self._terms: FrozenSet[Term] = term_set
        self._hash: Optional[int] = None
        self._variables: Optional[FrozenSet[VarId]] = None

    @staticmethod
    def true() -> 'MonotoneDNF':
        return _TRUE

    @staticmethod
    def false() -> 'MonotoneDNF':
        return _FALSE

    @property
    def terms(self) -> FrozenSet[Term]:
        return self._terms

    def is_true(self) -> bool:
        return frozenset() in self._terms

    def is_false(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return self.is_false() or self.is_true()

    def variables(self) -> FrozenSet[VarId]:
        """Returns the set of variables occurring in the formula."""
        if self._variables is None:
            self._variables = frozenset().union(*self._terms)
        return self._variables

    def sorted_terms(self) -> Tuple[Tuple[VarId, ...], ...]:
        """Returns the canonical form: sorted terms of sorted variables."""
        return tuple(sorted(tuple(sorted(t)) for t in self._terms))

    def evaluate(self, theta: Mapping[VarId, bool]) -> bool:
        """Evaluates the formula under an assignment.

        Raises:
            UnboundVariable: If a variable of the formula is missing.
        """
        def value(var: VarId) -> bool:
            try:
                return theta[var]
            except KeyError:
                raise UnboundVariable('Variable {} is not bound'.format(var))

        return any(all(value(v) for v in term) for term in self._terms)

    def __or__(self, other: 'MonotoneDNF') -> 'MonotoneDNF':
        return MonotoneDNF(self._terms | other._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonotoneDNF):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __str__(self) -> str:
        if self.is_true():
            return 'TRUE'
        if self.is_false():
            return 'FALSE'
        return ' | '.join(
                ' '.join(str(v) for v in term) for term in self.sorted_terms())

    def __repr__(self) -> str:
        return 'MonotoneDNF({})'.format(self)


def _minimize(terms: FrozenSet[Term]) -> FrozenSet[Term]:
    """Removes absorbed terms.

    Terms are considered in order of increasing size, and a term is
    kept only if none of the kept terms is a subset of it.
    """
    if frozenset() in terms:
        return frozenset([frozenset()])
    kept_by_var: Dict[VarId, List[Term]] = dict()
    kept: List[Term] = list()
    for term in sorted(terms, key=len):
        absorbed = any(
                other <= term
                for var in term for other in kept_by_var.get(var, ()))
        if not absorbed:
            kept.append(term)
            for var in term:
                kept_by_var.setdefault(var, []).append(term)
    return frozenset(kept)


_TRUE = MonotoneDNF([frozenset()], _minimal=True)
_FALSE = MonotoneDNF([], _minimal=True)


def restrict(phi: MonotoneDNF, theta: Mapping[VarId, bool]) -> MonotoneDNF:
    """Restricts a formula by a partial assignment.

    Satisfied variables are dropped from their terms, terms containing
    a falsified variable are removed, and the result is minimized
    again. If nothing changes, phi itself is returned.

    Args:
        phi: The formula to restrict.
        theta: The assignment, which may bind variables not in phi.

    Returns:
        phi[theta], in canonical form.
    """
    if not theta or phi.is_constant():
        return phi
    changed = False
    shrunk = False
    new_terms: List[Term] = list()
    for term in phi.terms:
        keep = True
        remaining: Optional[Set[VarId]] = None
        for var in term:
            value = theta.get(var)
            if value is None:
                continue
            if not value:
                keep = False
                break
            if remaining is None:
                remaining = set(term)
            remaining.discard(var)
        if not keep:
            changed = True
            continue
        if remaining is None:
            new_terms.append(term)
        else:
            if not remaining:
                return _TRUE
            changed = shrunk = True
            new_terms.append(frozenset(remaining))
    if not changed:
        return phi
    if not new_terms:
        return _FALSE
    return MonotoneDNF(new_terms, _minimal=not shrunk)


def units(phi: MonotoneDNF) -> FrozenSet[VarId]:
    """Returns the unit variables (1-prime implicants) of phi.

    Raises:
        ConstantFormula: If phi is true or false.
    """
    if phi.is_constant():
        raise ConstantFormula('A constant formula has no units')
    return frozenset(next(iter(t)) for t in phi.terms if len(t) == 1)


def prime_implicants_of_size(phi: MonotoneDNF, size: int) -> FrozenSet[Term]:
    """Returns the terms of phi with the given number of variables.

    For a minimized monotone DNF, the terms are exactly the prime
    implicants.
    """
    return frozenset(t for t in phi.terms if len(t) == size)


def degree_bound(phi: MonotoneDNF, x: VarId) -> int:
    """Returns the number of variables that co-occur with x in a term."""
    neighbours: Set[VarId] = set()
    for term in phi.terms:
        if x in term:
            neighbours.update(term)
    neighbours.discard(x)
    return len(neighbours)


def max_degree(phi: MonotoneDNF) -> int:
    """Returns the maximum degree bound over all variables, or 0."""
    neighbours: Dict[VarId, Set[VarId]] = dict()
    for term in phi.terms:
        for var in term:
            neighbours.setdefault(var, set()).update(term)
    return max((len(n) - 1 for n in neighbours.values()), default=0)


def variable_groups(terms: Iterable[Term]) -> List[FrozenSet[VarId]]:
    """Partitions the variables of the terms into connected groups.

    Two variables are connected if they occur together in a term.

    Returns:
        The groups, sorted by their smallest variable.
    """
    uf = UnionFind()
    for term in terms:
        if term:
            uf.union(*term)
    groups = [frozenset(group) for group in uf.to_sets()]
    return sorted(groups, key=min)


def components(phi: MonotoneDNF) -> List[MonotoneDNF]:
    """Splits phi into variable-disjoint components.

    Returns:
        One formula per connected group of variables, sorted by their
        smallest variable. Their disjunction equals phi.

    Raises:
        ConstantFormula: If phi is constant.
    """
    if phi.is_constant():
        raise ConstantFormula('Cannot split a constant formula')
    groups = variable_groups(phi.terms)
    group_of = {var: g for g, group in enumerate(groups) for var in group}
    parts: List[List[Term]] = [list() for _ in groups]
    for term in phi.terms:
        parts[group_of[next(iter(term))]].append(term)
    return [MonotoneDNF(part, _minimal=True) for part in parts]
