"""Positive CNFs of combinators, and the lattice of their clause unions.

A clause is a set of argument indices. The lattice contains every
union of clauses plus the empty set, ordered by reverse inclusion, so
the empty set is the top element 1 and the union of all clauses is the
bottom element 0.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from libwmc.errors import NotMonotone
from libwmc.lineage.combinator import CombinatorFn


Clause = FrozenSet[int]


def positive_cnf(f: CombinatorFn) -> List[Clause]:
    """Computes the prime implicates of a monotone combinator.

    A set C of arguments is an implicate if f is false when exactly the
    arguments in C are false. The minimal ones form the positive CNF.

    Returns:
        The clauses, sorted by size and then by their elements.

    Raises:
        NotMonotone: If f is not monotone.
    """
    if not f.is_monotone():
        raise NotMonotone('{!r} is not monotone'.format(f))
    full = 2 ** f.arity - 1
    masks = sorted(range(2 ** f.arity), key=lambda m: bin(m).count('1'))
    minimal: List[int] = list()
    for mask in masks:
        if f.table[full & ~mask]:
            continue
        if any((m & mask) == m for m in minimal):
            continue
        minimal.append(mask)
    clauses = [
            frozenset(i for i in range(f.arity) if (m >> i) & 1)
            for m in minimal]
    return sorted(clauses, key=lambda c: (len(c), sorted(c)))


@dataclass
class ClauseLattice:
    """The clause-union lattice with its Moebius function.

    Attributes:
        clauses: The clauses it was built from.
        elements: All clause unions and the empty set, by increasing
                size.
        mobius: mu(u, 1) for every element u.
    """
    clauses: List[Clause]
    elements: List[Clause] = field(default_factory=list)
    mobius: Dict[Clause, int] = field(default_factory=dict)

    @property
    def top(self) -> Clause:
        return frozenset()

    @property
    def bottom(self) -> Clause:
        return frozenset().union(*self.clauses)

    def mobius_bottom(self) -> int:
        """Returns mu(0, 1)."""
        return self.mobius[self.bottom]

    def below_top(self) -> List[Clause]:
        return [u for u in self.elements if u]

    def check_recursion(self) -> bool:
        """Re-checks the defining recursion at every element."""
        if self.mobius[self.top] != 1:
            return False
        for u in self.below_top():
            total = sum(self.mobius[w] for w in self.elements if w <= u)
            if total != 0:
                return False
        return True

    def __len__(self) -> int:
        return len(self.elements)


def build_lattice_and_mobius(clauses: Sequence[Iterable[int]]) -> ClauseLattice:
    """Enumerates the clause unions and computes mu(u, 1) for each.

    Raises:
        ValueError: If there are no clauses.
    """
    if not clauses:
        raise ValueError('Need at least one clause')
    clause_sets = [frozenset(c) for c in clauses]
    found: Set[Clause] = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        new = list()
        for u in frontier:
            for c in clause_sets:
                w = u | c
                if w not in found:
                    found.add(w)
                    new.append(w)
        frontier = new
    elements = sorted(found, key=lambda c: (len(c), sorted(c)))

    mobius: Dict[Clause, int] = dict()
    for u in elements:
        if not u:
            mobius[u] = 1
        else:
            mobius[u] = -sum(mobius[w] for w in elements if w < u)
    return ClauseLattice(clause_sets, elements, mobius)


def inclusion_exclusion_terms(
        clauses: Sequence[Iterable[int]]) -> List[Tuple[Clause, int]]:
    """Expands Pr[C_1 and ... and C_m] by inclusion-exclusion.

    Returns:
        One (union, sign) pair per non-empty subset of the clauses, where
        the term is sign * Pr[the disjunction over union].
    """
    clause_sets = [frozenset(c) for c in clauses]
    terms = list()
    for size in range(1, len(clause_sets) + 1):
        sign = 1 if size % 2 == 1 else -1
        for subset in combinations(clause_sets, size):
            terms.append((frozenset().union(*subset), sign))
    return terms


def grouped_terms(clauses: Sequence[Iterable[int]]) -> Dict[Clause, int]:
    """Sums the inclusion-exclusion signs per union, dropping zeros.

    The coefficient of a union u equals -mu(u, 1).
    """
    totals: Dict[Clause, int] = defaultdict(int)
    for union, sign in inclusion_exclusion_terms(clauses):
        totals[union] += sign
    return {u: c for u, c in totals.items() if c != 0}
