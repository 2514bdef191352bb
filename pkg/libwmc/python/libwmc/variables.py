from enum import IntEnum
import re
from typing import (
        Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple, Union)

from libwmc.errors import FormatError, InvalidAssignment


class Relation(IntEnum):
    """The kind of a variable; also its primary sort key."""
    R = 0
    S = 1
    T = 2
    FREE = 3


class VarId(NamedTuple):
    """Identifies a Boolean variable.

    Grounded variables are R(i), S_ell(i, j) and T(j). The S relation
    of the query h_0 has no subscript and uses ell = 0. Anything else
    is a free-form symbol, which sorts after all grounded variables.

    Comparison is tuple comparison, i.e. by relation kind, then ell,
    then i, then j, then name.
    """
    kind: Relation
    ell: int
    i: int
    j: int
    name: str

    @staticmethod
    def r(i: int) -> 'VarId':
        return VarId(Relation.R, 0, i, 0, '')

    @staticmethod
    def s(ell: int, i: int, j: int) -> 'VarId':
        return VarId(Relation.S, ell, i, j, '')

    @staticmethod
    def t(j: int) -> 'VarId':
        return VarId(Relation.T, 0, 0, j, '')

    @staticmethod
    def free(name: str) -> 'VarId':
        if not _free_name.fullmatch(name):
            raise FormatError('Invalid variable name "{}"'.format(name))
        return VarId(Relation.FREE, 0, 0, 0, name)

    @staticmethod
    def parse(text: str) -> 'VarId':
        """Parses a variable name as written in text files.

        Accepts ``R(1)``, ``S(1,2)``, ``S3(1,2)``, ``T(4)`` and plain
        identifiers like ``X`` or ``x_12``.

        Raises:
            FormatError: If the text is not a valid variable name.
        """
        match = _grounded_name.fullmatch(text)
        if match is None:
            return VarId.free(text)
        rel, ell, args = match.group(1), match.group(2), match.group(3)
        indices = [int(a) for a in args.split(',')]
        if rel == 'R' and ell is None and len(indices) == 1:
            return VarId.r(indices[0])
        if rel == 'T' and ell is None and len(indices) == 1:
            return VarId.t(indices[0])
        if rel == 'S' and len(indices) == 2:
            return VarId.s(int(ell or 0), indices[0], indices[1])
        raise FormatError('Invalid variable name "{}"'.format(text))

    def __str__(self) -> str:
        if self.kind == Relation.R:
            return 'R({})'.format(self.i)
        if self.kind == Relation.T:
            return 'T({})'.format(self.j)
        if self.kind == Relation.S:
            ell = str(self.ell) if self.ell > 0 else ''
            return 'S{}({},{})'.format(ell, self.i, self.j)
        return self.name


_grounded_name = re.compile(r'([RST])(\d+)?\((\d+(?:,\d+)*)\)')

_free_name = re.compile(r'[A-Za-z_][A-Za-z0-9_\'.]*')


class Assignment(Mapping[VarId, bool]):
    """A partial assignment of truth values to variables.

    Assignments are immutable. Combining two assignments that bind the
    same variable to different values is an error.
    """
    def __init__(
            self, bindings: Union[
                None, Mapping[VarId, bool],
                Iterable[Tuple[VarId, bool]]] = None
            ) -> None:
        """Create an Assignment.

        Args:
            bindings: Either a mapping or a sequence of (variable,
                    value) pairs. Repeating a pair is allowed, binding
                    a variable to both values is not.

        Raises:
            InvalidAssignment: On conflicting bindings.
        """
        self._bindings: Dict[VarId, bool] = dict()
        self._hash: Optional[int] = None
        if bindings is None:
            return
        items = bindings.items() if isinstance(bindings, Mapping) else bindings
        for var, value in items:
            self._bind(var, bool(value))

    def _bind(self, var: VarId, value: bool) -> None:
        old = self._bindings.get(var)
        if old is not None and old != value:
            raise InvalidAssignment(
                    'Variable {} bound to both 0 and 1'.format(var))
        self._bindings[var] = value

    def __getitem__(self, var: VarId) -> bool:
        return self._bindings[var]

    def __iter__(self) -> Iterator[VarId]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._bindings.items()))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Assignment):
            return NotImplemented
        return self._bindings == other._bindings

    def __repr__(self) -> str:
        return 'Assignment({{{}}})'.format(', '.join(
            '{}={}'.format(var, int(val))
            for var, val in sorted(self._bindings.items())))

    def union(self, other: Mapping[VarId, bool]) -> 'Assignment':
        """Returns the union of this assignment and another.

        Raises:
            InvalidAssignment: If they disagree on a variable.
        """
        result = Assignment(self._bindings)
        for var, value in other.items():
            result._bind(var, value)
        return result

    def extended(self, var: VarId, value: bool) -> 'Assignment':
        """Returns a copy with one more binding."""
        return self.union({var: value})

    def set_all(self, variables: Iterable[VarId], value: bool) -> 'Assignment':
        """Returns a copy with all given variables bound to value."""
        return self.union({var: value for var in variables})
