from pathlib import Path
from typing import Dict, Iterator, List, Tuple

from libwmc.errors import FormatError
from libwmc.formula import MonotoneDNF
from libwmc.variables import Assignment, VarId
from libwmc.weights import WeightMap, to_probability


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith('#'):
            yield lineno, line


def parse_formula(text: str, source: str = '<string>') -> MonotoneDNF:
    """Parses a monotone DNF, one term per line.

    A term is a whitespace-separated list of variable names. The lines
    TRUE and FALSE denote the constants; an empty file is FALSE.

    Raises:
        FormatError: On invalid variable names.
    """
    terms: List[List[VarId]] = list()
    for lineno, line in _lines(text):
        if line == 'TRUE':
            terms.append([])
            continue
        if line == 'FALSE':
            continue
        try:
            terms.append([VarId.parse(name) for name in line.split()])
        except FormatError as e:
            raise FormatError(str(e), source, lineno)
    return MonotoneDNF(terms)


def format_formula(phi: MonotoneDNF) -> str:
    if phi.is_true():
        return 'TRUE\n'
    if phi.is_false():
        return 'FALSE\n'
    return ''.join(
            ' '.join(str(v) for v in term) + '\n'
            for term in phi.sorted_terms())


def parse_weights(text: str, source: str = '<string>') -> WeightMap:
    """Parses a weights file.

    Each line holds a variable name and a probability, written as a/b
    or as a decimal. A line ``default p`` sets the weight of all other
    variables.

    Raises:
        FormatError: On malformed lines or probabilities out of range.
    """
    default = None
    weights: Dict[VarId, str] = dict()
    for lineno, line in _lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError('Expected "name p"', source, lineno)
        try:
            if parts[0] == 'default':
                default = to_probability(parts[1])
            else:
                var = VarId.parse(parts[0])
                if var in weights:
                    raise FormatError('Duplicate weight for {}'.format(var))
                to_probability(parts[1])
                weights[var] = parts[1]
        except FormatError as e:
            raise FormatError(str(e), source, lineno)
    if default is None:
        return WeightMap(weights)
    return WeightMap(weights, default)


def parse_assignment(text: str, source: str = '<string>') -> Assignment:
    """Parses an assignment file, one ``name 0`` or ``name 1`` per line.

    Raises:
        FormatError: On malformed lines.
        InvalidAssignment: If a variable is bound to both values.
    """
    pairs = list()
    for lineno, line in _lines(text):
        parts = line.split()
        if len(parts) != 2 or parts[1] not in ('0', '1'):
            raise FormatError('Expected "name 0" or "name 1"', source, lineno)
        try:
            pairs.append((VarId.parse(parts[0]), parts[1] == '1'))
        except FormatError as e:
            raise FormatError(str(e), source, lineno)
    return Assignment(pairs)


def load_formula(path: Path) -> MonotoneDNF:
    return parse_formula(path.read_text(), str(path))


def load_weights(path: Path) -> WeightMap:
    return parse_weights(path.read_text(), str(path))


def load_assignment(path: Path) -> Assignment:
    return parse_assignment(path.read_text(), str(path))
