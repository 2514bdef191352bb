from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from libwmc.errors import Unsupported
from libwmc.formula import MonotoneDNF, restrict
from libwmc.lineage.combinator import CombinatorFn
from libwmc.variables import VarId


class CompositeLineage:
    """A combinator applied to monotone DNF arguments.

    This represents f(A_0, ..., A_{m-1}) without flattening it into a
    single formula. Arguments keep their positions; those that have
    become constant are the fixed arguments, and are folded into the
    residual combinator, as are arguments that the combinator no
    longer depends on.

    Attributes:
        combinator: The function f.
        arguments: The argument formulas, one per position.
    """
    def __init__(
            self, combinator: CombinatorFn,
            arguments: Sequence[MonotoneDNF]) -> None:
        """Create a CompositeLineage.

        Raises:
            ValueError: If the number of arguments does not match the
                    arity of the combinator.
        """
        if len(arguments) != combinator.arity:
            raise ValueError(
                    'Combinator of arity {} given {} arguments'.format(
                        combinator.arity, len(arguments)))
        self.combinator = combinator
        self.arguments = tuple(arguments)
        self._residual: Optional[
                Tuple[CombinatorFn, Tuple[int, ...]]] = None
        self._key: Optional[Tuple[bytes, Tuple[MonotoneDNF, ...]]] = None

    @property
    def fixed(self) -> Dict[int, bool]:
        """Values of the arguments that are constant."""
        return {
                i: arg.is_true() for i, arg in enumerate(self.arguments)
                if arg.is_constant()}

    def residual(self) -> Tuple[CombinatorFn, Tuple[int, ...]]:
        """Returns the residual combinator and its argument positions.

        The residual combinator has the constant arguments curried in,
        and any argument it does not depend on removed.

        Returns:
            The residual combinator, and for each of its arguments the
            position in self.arguments.
        """
        if self._residual is None:
            fn = self.combinator
            live = list(range(self.combinator.arity))
            for i in reversed(range(self.combinator.arity)):
                arg = self.arguments[i]
                if arg.is_constant():
                    fn = fn.curry(i, arg.is_true())
                    del live[i]
            for pos in reversed(range(len(live))):
                if not fn.depends_on(pos)[0]:
                    fn = fn.curry(pos, False)
                    del live[pos]
            self._residual = fn, tuple(live)
        return self._residual

    def live_arguments(self) -> Tuple[MonotoneDNF, ...]:
        return tuple(self.arguments[i] for i in self.residual()[1])

    def constant_value(self) -> Optional[bool]:
        """Returns the value if the lineage is constant, else None."""
        return self.residual()[0].constant_value()

    def variables(self) -> FrozenSet[VarId]:
        return frozenset().union(
                *(arg.variables() for arg in self.live_arguments()))

    def cache_key(self) -> Tuple[bytes, Tuple[MonotoneDNF, ...]]:
        """A key that is equal for equal residual lineages."""
        if self._key is None:
            fn, _ = self.residual()
            self._key = fn.table.tobytes(), self.live_arguments()
        return self._key

    def evaluate(self, theta: Mapping[VarId, bool]) -> bool:
        """Evaluates the lineage on a total assignment."""
        fn, live = self.residual()
        return fn([self.arguments[i].evaluate(theta) for i in live])

    def restrict(self, theta: Mapping[VarId, bool]) -> 'CompositeLineage':
        return restrict_composite(self, theta)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompositeLineage):
            return NotImplemented
        return self.cache_key() == other.cache_key()

    def __hash__(self) -> int:
        return hash(self.cache_key())

    def __repr__(self) -> str:
        return 'CompositeLineage({!r}, [{}])'.format(
                self.combinator, ', '.join(str(a) for a in self.arguments))


def restrict_composite(
        psi: CompositeLineage, theta: Mapping[VarId, bool]
        ) -> CompositeLineage:
    """Restricts every argument of psi by theta.

    Returns psi itself if no argument changes.
    """
    if not theta:
        return psi
    new_args = [restrict(arg, theta) for arg in psi.arguments]
    if all(new is old for new, old in zip(new_args, psi.arguments)):
        return psi
    return CompositeLineage(psi.combinator, new_args)


def single(phi: MonotoneDNF) -> CompositeLineage:
    """Wraps a single formula as a composite with the identity."""
    return CompositeLineage(CombinatorFn.or_of(1), [phi])


def flatten(psi: CompositeLineage) -> MonotoneDNF:
    """Expands a composite with a monotone combinator into one DNF.

    Each prime implicant of the combinator contributes the conjunction
    of its arguments, multiplied out.

    Raises:
        Unsupported: If the combinator is not monotone.
    """
    fn, live = psi.residual()
    if not fn.is_monotone():
        raise Unsupported('Only monotone combinators can be flattened')
    terms: List[FrozenSet[VarId]] = list()
    for implicant in fn.prime_implicants():
        product: List[FrozenSet[VarId]] = [frozenset()]
        for pos in sorted(implicant):
            arg = psi.arguments[live[pos]]
            product = [p | t for p in product for t in arg.terms]
        terms.extend(product)
    return MonotoneDNF(terms)
