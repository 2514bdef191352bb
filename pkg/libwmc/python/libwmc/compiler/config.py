from dataclasses import dataclass
from enum import Enum


class Heuristic(Enum):
    """How the compiler picks the variable to branch on."""
    FIRST_UNSET = 'first-unset'
    MAX_OCCURRENCE = 'max-occurrence'


class NegationMode(Enum):
    """How disjunctive component splits are represented in the trace.

    DIRECT_DNF emits an Or node over the components. NEGATE_TO_CNF
    views the negated formula as a CNF, splits its clause set with an
    And node, and wraps that in Not.
    """
    DIRECT_DNF = 'direct-dnf'
    NEGATE_TO_CNF = 'negate-to-cnf'


DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class CompileConfig:
    """Settings for the grounded compiler.

    Attributes:
        heuristic: Variable selection heuristic.
        negation_mode: Representation of disjunctive splits.
        budget: Maximum number of nodes to create.
        cache: Whether to reuse results for repeated residuals.
        decompose: Whether to split into independent components. With
                this off, the trace is a plain FBDD.
    """
    heuristic: Heuristic = Heuristic.MAX_OCCURRENCE
    negation_mode: NegationMode = NegationMode.DIRECT_DNF
    budget: int = DEFAULT_BUDGET
    cache: bool = True
    decompose: bool = True

    def __post_init__(self) -> None:
        if self.budget <= 0:
            raise ValueError('The node budget must be positive')
