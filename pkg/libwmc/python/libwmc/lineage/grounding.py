"""Grounding of the query family over a domain [n].

The queries are h_k0 = R(x), S_1(x, y); h_kl = S_l(x, y), S_l+1(x, y)
for 0 < l < k; h_kk = S_k(x, y), T(y); and h_0 = R(x), S(x, y), T(y).
Their lineages over the domain {1, ..., n} are monotone DNFs.
"""
import logging
from typing import List

from libwmc.errors import EmptyDomain
from libwmc.formula import MonotoneDNF
from libwmc.lineage.combinator import CombinatorFn
from libwmc.lineage.composite import CompositeLineage
from libwmc.variables import VarId


_logger = logging.getLogger(__name__)


def _check(k: int, n: int) -> None:
    if n < 1:
        raise EmptyDomain('The domain must contain at least one element')
    if k < 1:
        raise ValueError('k must be at least 1, got {}'.format(k))


def _pairs(n: int) -> List[List[int]]:
    return [[i, j] for i in range(1, n + 1) for j in range(1, n + 1)]


def hk_term(k: int, ell: int, i: int, j: int) -> List[VarId]:
    """Returns the two variables of the (i, j) term of H_k,ell."""
    if ell == 0:
        return [VarId.r(i), VarId.s(1, i, j)]
    if ell == k:
        return [VarId.s(k, i, j), VarId.t(j)]
    return [VarId.s(ell, i, j), VarId.s(ell + 1, i, j)]


def ground_hk_family(k: int, n: int) -> List[MonotoneDNF]:
    """Grounds h_k0, ..., h_kk over [n].

    Returns:
        The lineages H_k0, ..., H_kk, each with n^2 terms.

    Raises:
        EmptyDomain: If n < 1.
    """
    _check(k, n)
    return [
            MonotoneDNF(
                (hk_term(k, ell, i, j) for i, j in _pairs(n)), _minimal=True)
            for ell in range(k + 1)]


def ground_h0(n: int) -> MonotoneDNF:
    """Grounds h_0 = R(x), S(x, y), T(y) over [n]."""
    if n < 1:
        raise EmptyDomain('The domain must contain at least one element')
    return MonotoneDNF(
            ([VarId.r(i), VarId.s(0, i, j), VarId.t(j)] for i, j in _pairs(n)),
            _minimal=True)


def ground_b_family(k: int, n: int) -> List[MonotoneDNF]:
    """Grounds b_0 = R(x), b_l = S_l(x, y) and b_k+1 = T(y) over [n].

    Returns:
        The lineages B_0, ..., B_k+1, all disjunctions of single
        variables.
    """
    _check(k, n)
    family = [MonotoneDNF([[VarId.r(i)] for i in range(1, n + 1)])]
    for ell in range(1, k + 1):
        family.append(MonotoneDNF(
            [[VarId.s(ell, i, j)] for i, j in _pairs(n)]))
    family.append(MonotoneDNF([[VarId.t(j)] for j in range(1, n + 1)]))
    return family


def grounded_variables(k: int, n: int) -> List[VarId]:
    """All kn^2 + 2n variables of the family, in VarId order."""
    _check(k, n)
    result = [VarId.r(i) for i in range(1, n + 1)]
    result.extend(
            VarId.s(ell, i, j)
            for ell in range(1, k + 1) for i, j in _pairs(n))
    result.extend(VarId.t(j) for j in range(1, n + 1))
    return result


def ground_query(f: CombinatorFn, k: int, n: int) -> CompositeLineage:
    """Grounds Q = f(h_k0, ..., h_kk) over [n].

    Raises:
        ValueError: If f does not have arity k+1.
    """
    if f.arity != k + 1:
        raise ValueError('Expected a combinator of arity {}'.format(k + 1))
    _logger.debug('Grounding query with k = {} over n = {}'.format(k, n))
    return CompositeLineage(f, ground_hk_family(k, n))


def ground_dichotomy_query(
        g: CombinatorFn, k: int, n: int) -> CompositeLineage:
    """Grounds Q = g(h_k0, ..., h_kk, b_0, ..., b_k+1) over [n].

    Raises:
        ValueError: If g does not have arity 2k+3.
    """
    if g.arity != 2 * k + 3:
        raise ValueError('Expected a combinator of arity {}'.format(2 * k + 3))
    return CompositeLineage(
            g, ground_hk_family(k, n) + ground_b_family(k, n))
