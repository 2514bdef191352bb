from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Union

from libwmc.errors import FormatError
from libwmc.variables import VarId


Probability = Union[Fraction, int, str]


def to_probability(value: Probability) -> Fraction:
    """Converts a value to an exact probability.

    Strings may be written as ``a/b`` or as a decimal number.

    Raises:
        FormatError: If the value is not a number in [0, 1].
    """
    try:
        p = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise FormatError('Invalid probability "{}"'.format(value))
    if p < 0 or p > 1:
        raise FormatError('Probability {} is not in [0, 1]'.format(p))
    return p


class WeightMap(Mapping[VarId, Fraction]):
    """Probabilities of variables being true.

    Variables without an explicit weight get the default weight.
    """
    def __init__(
            self, weights: Optional[Mapping[VarId, Probability]] = None,
            default: Probability = Fraction(1, 2)) -> None:
        """Create a WeightMap.

        Args:
            weights: Explicit weights per variable.
            default: Weight of all other variables.

        Raises:
            FormatError: If any weight is outside [0, 1].
        """
        self.default = to_probability(default)
        self._weights: Dict[VarId, Fraction] = dict()
        if weights is not None:
            for var, p in weights.items():
                self._weights[var] = to_probability(p)

    def __getitem__(self, var: VarId) -> Fraction:
        return self._weights.get(var, self.default)

    def __contains__(self, var: object) -> bool:
        return var in self._weights

    def __iter__(self) -> Iterator[VarId]:
        return iter(self._weights)

    def __len__(self) -> int:
        return len(self._weights)

    def explicit(self) -> Dict[VarId, Fraction]:
        """Returns the explicitly set weights."""
        return dict(self._weights)


UNIFORM = WeightMap()
