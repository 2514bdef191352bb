from typing import (
        Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple)

import numpy as np

from libwmc.errors import FormatError


Clause = FrozenSet[int]


class CombinatorFn:
    """A Boolean function over a small number of arguments.

    The truth table is stored as a numpy boolean vector of length
    2^arity, where entry x holds the value on the input whose argument
    i is bit i of x. Optionally, a positive CNF clause list is attached;
    if so, it is checked against the table.

    Attributes:
        arity: Number of arguments.
        table: The truth table, read-only.
        clauses: The positive CNF view, if known.
    """
    def __init__(
            self, arity: int, table: np.ndarray,
            clauses: Optional[Iterable[Iterable[int]]] = None) -> None:
        """Create a CombinatorFn.

        Args:
            arity: Number of arguments.
            table: Truth table of length 2^arity.
            clauses: Positive CNF clauses over argument indices.

        Raises:
            FormatError: If the table has the wrong length, or the
                    clauses do not match it.
        """
        table = np.asarray(table, dtype=bool).reshape(-1)
        if arity < 0 or table.shape[0] != 2 ** arity:
            raise FormatError(
                    'Truth table of length {} does not fit arity {}'.format(
                        table.shape[0], arity))
        table.setflags(write=False)
        self.arity = arity
        self.table = table
        self.clauses: Optional[Tuple[Clause, ...]] = None
        self._key = (arity, table.tobytes())
        if clauses is not None:
            clause_list = tuple(frozenset(c) for c in clauses)
            if not np.array_equal(_cnf_table(arity, clause_list), table):
                raise FormatError('Clause list does not match truth table')
            self.clauses = clause_list

    @staticmethod
    def from_function(
            arity: int, fn: Callable[[Tuple[bool, ...]], bool]
            ) -> 'CombinatorFn':
        table = np.array([fn(_bits(x, arity)) for x in range(2 ** arity)])
        return CombinatorFn(arity, table)

    @staticmethod
    def from_cnf(arity: int, clauses: Iterable[Iterable[int]]) -> 'CombinatorFn':
        """Creates a combinator from positive CNF clauses.

        Raises:
            FormatError: If a clause mentions an index out of range.
        """
        clause_list = [frozenset(c) for c in clauses]
        for clause in clause_list:
            if any(i < 0 or i >= arity for i in clause):
                raise FormatError(
                        'Clause {} has an index outside 0..{}'.format(
                            sorted(clause), arity - 1))
        return CombinatorFn(arity, _cnf_table(arity, clause_list), clause_list)

    @staticmethod
    def or_of(arity: int) -> 'CombinatorFn':
        return CombinatorFn.from_cnf(arity, [range(arity)])

    @staticmethod
    def and_of(arity: int) -> 'CombinatorFn':
        return CombinatorFn.from_cnf(arity, [[i] for i in range(arity)])

    @staticmethod
    def constant(arity: int, value: bool) -> 'CombinatorFn':
        return CombinatorFn(arity, np.full(2 ** arity, value, dtype=bool))

    @staticmethod
    def from_hex(arity: int, text: str) -> 'CombinatorFn':
        """Parses a hexadecimal truth table.

        Bit x of the number (least significant first) is the value on
        input x.

        Raises:
            FormatError: If the text is not hexadecimal or too large.
        """
        try:
            value = int(text, 16)
        except ValueError:
            raise FormatError('Invalid hexadecimal truth table "{}"'.format(text))
        size = 2 ** arity
        if value >> size:
            raise FormatError(
                    'Truth table {} has more than {} bits'.format(text, size))
        table = np.array([(value >> x) & 1 for x in range(size)], dtype=bool)
        return CombinatorFn(arity, table)

    def to_hex(self) -> str:
        value = sum(1 << int(x) for x in np.flatnonzero(self.table))
        digits = max(1, len(self.table) // 4)
        return '{:0{}x}'.format(value, digits)

    def cube(self) -> np.ndarray:
        """Returns the table with one axis per argument, axis i = X_i."""
        return self.table.reshape((2,) * self.arity, order='F')

    def __call__(self, args: Sequence[bool]) -> bool:
        index = sum(1 << i for i, a in enumerate(args) if a)
        return bool(self.table[index])

    def constant_value(self) -> Optional[bool]:
        """Returns the value if the function is constant, else None."""
        if self.table.all():
            return True
        if not self.table.any():
            return False
        return None

    def depends_on(self, ell: int) -> Tuple[bool, Optional[Tuple[bool, ...]]]:
        """Checks whether the function depends on argument ell.

        Returns:
            A tuple (depends, witness). If it depends, witness is a
            full input vector (with position ell set to False) such that
            flipping argument ell changes the output, otherwise None.

        Raises:
            IndexError: If ell is out of range.
        """
        if not 0 <= ell < self.arity:
            raise IndexError('Argument {} out of range'.format(ell))
        cube = self.cube()
        diff = np.take(cube, 0, axis=ell) != np.take(cube, 1, axis=ell)
        hits = np.argwhere(diff)
        if hits.shape[0] == 0:
            return False, None
        rest = [bool(b) for b in hits[0]]
        rest.insert(ell, False)
        return True, tuple(rest)

    def dependent_arguments(self) -> List[int]:
        return [ell for ell in range(self.arity) if self.depends_on(ell)[0]]

    def curry(self, ell: int, value: bool) -> 'CombinatorFn':
        """Fixes argument ell, returning a function of the others."""
        sub = np.take(self.cube(), int(value), axis=ell)
        return CombinatorFn(self.arity - 1, np.reshape(sub, -1, order='F'))

    def negated(self) -> 'CombinatorFn':
        return CombinatorFn(self.arity, ~self.table)

    def is_monotone(self) -> bool:
        """Checks that raising any argument never lowers the value."""
        index = np.arange(2 ** self.arity)
        for i in range(self.arity):
            low = index[((index >> i) & 1) == 0]
            if (self.table[low] & ~self.table[low | (1 << i)]).any():
                return False
        return True

    def prime_implicants(self) -> List[Clause]:
        """Returns the minimal sets of arguments that make f true.

        Only meaningful for monotone functions, where setting such a
        set to true and the rest to false gives true.
        """
        masks = sorted(range(2 ** self.arity), key=lambda m: bin(m).count('1'))
        minimal: List[int] = list()
        for mask in masks:
            if not self.table[mask] or any((m & mask) == m for m in minimal):
                continue
            minimal.append(mask)
        return [
                frozenset(i for i in range(self.arity) if (m >> i) & 1)
                for m in minimal]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CombinatorFn):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.clauses is not None:
            return 'CombinatorFn({}, cnf: {})'.format(
                    self.arity, format_clauses(self.clauses))
        return 'CombinatorFn({}, tt: {})'.format(self.arity, self.to_hex())


def _bits(x: int, arity: int) -> Tuple[bool, ...]:
    return tuple(bool((x >> i) & 1) for i in range(arity))


def _cnf_table(arity: int, clauses: Sequence[Clause]) -> np.ndarray:
    index = np.arange(2 ** arity)
    table = np.ones(2 ** arity, dtype=bool)
    for clause in clauses:
        mask = sum(1 << i for i in clause)
        table &= (index & mask) != 0
    return table


def format_clauses(clauses: Iterable[Clause]) -> str:
    return ' | '.join(' '.join(str(i) for i in sorted(c)) for c in clauses)


def project_g_at_ones(g: CombinatorFn, k: int) -> CombinatorFn:
    """Fixes the last k+2 arguments of g to true.

    Args:
        g: A combinator of arity 2k+3; arguments k+1..2k+2 are the
                b_0..b_{k+1} of the query.
        k: The query parameter.

    Returns:
        The combinator g(X, 1) over X_0..X_k.

    Raises:
        ValueError: If the arity is not 2k+3.
    """
    if g.arity != 2 * k + 3:
        raise ValueError('Expected arity {}, got {}'.format(2 * k + 3, g.arity))
    result = g
    for ell in range(2 * k + 2, k, -1):
        result = result.curry(ell, True)
    return result


F_W_CLAUSES = ((0, 2), (0, 3), (1, 3))


def f_w() -> CombinatorFn:
    """The safe combinator (X0 v X2)(X0 v X3)(X1 v X3), with k = 3."""
    return CombinatorFn.from_cnf(4, F_W_CLAUSES)
