"""Brute-force weighted model counting, used as the reference result."""
from fractions import Fraction
import logging
from typing import Sequence, Union

import numpy as np

from libwmc.errors import TooLarge
from libwmc.formula import MonotoneDNF
from libwmc.lineage.composite import CompositeLineage
from libwmc.variables import VarId
from libwmc.weights import UNIFORM, WeightMap


_logger = logging.getLogger(__name__)

DEFAULT_CAP = 24

Lineage = Union[MonotoneDNF, CompositeLineage]


def _formula_mask(
        phi: MonotoneDNF, position: dict, index: np.ndarray) -> np.ndarray:
    result = np.zeros(index.shape[0], dtype=bool)
    for term in phi.terms:
        term_mask = np.ones(index.shape[0], dtype=bool)
        for var in term:
            term_mask &= ((index >> position[var]) & 1).astype(bool)
        result |= term_mask
    return result


def evaluation_mask(
        lineage: Lineage, variables: Sequence[VarId]) -> np.ndarray:
    """Evaluates a lineage on every assignment to the given variables.

    Entry x of the result is the value on the assignment that sets
    variables[i] to bit i of x.

    Args:
        lineage: The formula to evaluate.
        variables: Must include every variable the lineage mentions.

    Returns:
        A boolean vector of length 2^len(variables).
    """
    position = {var: i for i, var in enumerate(variables)}
    index = np.arange(2 ** len(variables), dtype=np.int64)
    if isinstance(lineage, MonotoneDNF):
        return _formula_mask(lineage, position, index)
    fn, live = lineage.residual()
    code = np.zeros(index.shape[0], dtype=np.int64)
    for bit, pos in enumerate(live):
        arg_mask = _formula_mask(lineage.arguments[pos], position, index)
        code |= arg_mask.astype(np.int64) << bit
    return fn.table[code]


def brute_force_wmc(
        lineage: Lineage, w: WeightMap = UNIFORM, cap: int = DEFAULT_CAP
        ) -> Fraction:
    """Computes the probability of a lineage by enumeration.

    Args:
        lineage: A formula or composite lineage.
        w: Variable probabilities.
        cap: Maximum number of variables to enumerate over.

    Returns:
        The exact probability that the lineage is true.

    Raises:
        TooLarge: If the lineage has more than cap variables.
    """
    variables = sorted(lineage.variables())
    if len(variables) > cap:
        raise TooLarge('{} variables exceed the oracle cap of {}'.format(
            len(variables), cap))
    _logger.debug('Enumerating {} variables'.format(len(variables)))
    mask = evaluation_mask(lineage, variables)
    return mask_probability(mask, variables, w)


def mask_probability(
        mask: np.ndarray, variables: Sequence[VarId], w: WeightMap
        ) -> Fraction:
    """Sums the weights of the assignments selected by a mask.

    The mask is indexed as by evaluation_mask.
    """
    count = len(variables)
    probs = [w[var] for var in variables]
    if all(p == probs[0] for p in probs):
        # uniform weights, so only the number of true variables matters
        p = probs[0] if probs else Fraction(1)
        index = np.flatnonzero(mask)
        ones = np.zeros(index.shape[0], dtype=np.int64)
        for i in range(count):
            ones += (index >> i) & 1
        per_weight = np.bincount(ones, minlength=count + 1)
        return sum(
                (int(c) * p ** h * (1 - p) ** (count - h)
                 for h, c in enumerate(per_weight)),
                Fraction(0))

    # contract one variable at a time, in exact integer arithmetic
    nums = [p.numerator for p in probs]
    dens = [p.denominator for p in probs]
    cube = mask.astype(object).reshape((2,) * count, order='F')
    for i in reversed(range(count)):
        cube = ((dens[i] - nums[i]) * cube[..., 0] + nums[i] * cube[..., 1])
    denominator = 1
    for d in dens:
        denominator *= d
    return Fraction(int(cube), denominator)


def model_count(lineage: Lineage) -> int:
    """Counts satisfying assignments over the lineage's variables."""
    variables = sorted(lineage.variables())
    if len(variables) > DEFAULT_CAP:
        raise TooLarge('Too many variables to count models')
    return int(np.count_nonzero(evaluation_mask(lineage, variables)))
