"""Lifted evaluation of Q = f(h_k0, ..., h_kk).

With f written as a positive CNF, Pr[Q] is a signed sum of
probabilities of disjunctions of h_k,ell over clause unions u, with
coefficients -mu(u, 1). If mu(0, 1) = 0, the union of all indices
drops out, every remaining disjunction is transversal-free, and each
term is computed on a polynomial-size family OBDD.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import logging
from typing import List, Optional

from libwmc.diagrams.evaluation import wmc
from libwmc.errors import InternalSafetyViolation, UnsafeQuery
from libwmc.lifted.lattice import (
        Clause, ClauseLattice, build_lattice_and_mobius, positive_cnf)
from libwmc.lineage.combinator import CombinatorFn
from libwmc.transforms.family_obdd import (
        FAMILY_OBDD_SIZE_CONSTANT, build_family_obdd)
from libwmc.variables import Assignment
from libwmc.weights import UNIFORM, WeightMap


_logger = logging.getLogger(__name__)


@dataclass
class LiftedTerm:
    """One term of the lifted sum.

    Attributes:
        element: The clause union u.
        mobius: mu(u, 1).
        probability: Pr of the disjunction of h_k,ell over u.
        nodes: Size of the OBDD used to compute it.
    """
    element: Clause
    mobius: int
    probability: Fraction
    nodes: int

    @property
    def coefficient(self) -> int:
        return -self.mobius


@dataclass
class LiftedResult:
    probability: Fraction
    terms: List[LiftedTerm] = field(default_factory=list)
    lattice: Optional[ClauseLattice] = None

    @property
    def total_nodes(self) -> int:
        return sum(term.nodes for term in self.terms)


def lattice_of(f: CombinatorFn) -> Optional[ClauseLattice]:
    """Returns the clause lattice of f, or None if f is constant.

    Raises:
        NotMonotone: If f is not monotone.
    """
    if f.constant_value() is not None:
        return None
    return build_lattice_and_mobius(positive_cnf(f))


def is_safe(f: CombinatorFn) -> bool:
    """Checks whether mu(0, 1) = 0 on the clause lattice of f.

    Constant combinators are trivially safe.

    Raises:
        NotMonotone: If f is not monotone.
    """
    lattice = lattice_of(f)
    return lattice is None or lattice.mobius_bottom() == 0


def lifted_work_bound(lattice_size: int, k: int, n: int) -> int:
    """Bounds the total OBDD nodes created by lifted_evaluate."""
    return lattice_size * FAMILY_OBDD_SIZE_CONSTANT * k * 2 ** k * n * n


def lifted_evaluate(
        f: CombinatorFn, k: int, n: int, w: WeightMap = UNIFORM
        ) -> LiftedResult:
    """Computes Pr[f(h_k0, ..., h_kk)] over [n] by inclusion-exclusion.

    Args:
        f: A monotone combinator of arity k+1.
        k: The query parameter, at least 1.
        n: The domain size.
        w: Tuple probabilities.

    Returns:
        The probability, together with the terms of the sum.

    Raises:
        ValueError: If f does not have arity k+1.
        NotMonotone: If f is not monotone.
        UnsafeQuery: If mu(0, 1) != 0.
        InternalSafetyViolation: If a term with a non-zero coefficient
                covers all indices.
    """
    if f.arity != k + 1:
        raise ValueError('Expected a combinator of arity {}'.format(k + 1))
    value = f.constant_value()
    if value is not None:
        return LiftedResult(Fraction(int(value)))
    lattice = build_lattice_and_mobius(positive_cnf(f))
    if lattice.mobius_bottom() != 0:
        raise UnsafeQuery(
                'mu(0, 1) = {} for {!r}, so the query is #P-hard and cannot be'
                ' lifted'.format(lattice.mobius_bottom(), f))

    full = frozenset(range(k + 1))
    result = LiftedResult(Fraction(0), lattice=lattice)
    for u in lattice.below_top():
        mu = lattice.mobius[u]
        if mu == 0:
            continue
        if u == full:
            raise InternalSafetyViolation(
                    'Term over all indices has coefficient {}'.format(-mu))
        disjunction = CombinatorFn.from_cnf(k + 1, [sorted(u)])
        diagram = build_family_obdd(Assignment(), u, k, n, combine=disjunction)
        prob = wmc(diagram, w)[0]
        result.terms.append(LiftedTerm(u, mu, prob, len(diagram)))
        result.probability -= mu * prob
        _logger.debug('Term {}: mu = {}, p = {}, {} nodes'.format(
            sorted(u), mu, prob, len(diagram)))
    _logger.info('Lifted probability {} from {} terms, {} OBDD nodes'.format(
        result.probability, len(result.terms), result.total_nodes))
    return result


def lifted_wmc(
        f: CombinatorFn, k: int, n: int, w: WeightMap = UNIFORM) -> Fraction:
    """Returns Pr[f(h_k0, ..., h_kk)]; see lifted_evaluate."""
    return lifted_evaluate(f, k, n, w).probability
