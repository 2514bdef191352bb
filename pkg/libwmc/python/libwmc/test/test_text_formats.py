from fractions import Fraction

import pytest

from libwmc.errors import FormatError, InvalidAssignment
from libwmc.formula import MonotoneDNF
from libwmc.text_formats import (
        format_formula, load_formula, parse_assignment, parse_formula,
        parse_weights)
from libwmc.variables import VarId


def test_parse_formula() -> None:
    text = '# a comment\nR(1) S1(1,1)\n\nS1(1,1) T(1)\n'
    phi = parse_formula(text)
    assert phi == MonotoneDNF([
        [VarId.r(1), VarId.s(1, 1, 1)], [VarId.s(1, 1, 1), VarId.t(1)]])

    assert parse_formula('').is_false()
    assert parse_formula('FALSE\n').is_false()
    assert parse_formula('X\nTRUE\n').is_true()


def test_parse_formula_error() -> None:
    with pytest.raises(FormatError) as e:
        parse_formula('X Y\nR(1,2)\n', 'phi.dnf')
    assert e.value.line == 2
    assert 'phi.dnf:2' in str(e.value)


def test_format_formula(tmp_path) -> None:
    phi = MonotoneDNF([[VarId.free('Y')], [VarId.t(1), VarId.r(2)]])
    text = format_formula(phi)
    assert text == 'R(2) T(1)\nY\n'

    path = tmp_path / 'phi.dnf'
    path.write_text(text)
    assert load_formula(path) == phi


def test_parse_weights() -> None:
    w = parse_weights('R(1) 1/3\ndefault 0.25\n')
    assert w[VarId.r(1)] == Fraction(1, 3)
    assert w[VarId.r(2)] == Fraction(1, 4)

    with pytest.raises(FormatError):
        parse_weights('R(1) 1/3\nR(1) 1/2\n')

    with pytest.raises(FormatError):
        parse_weights('R(1) 2\n')

    with pytest.raises(FormatError):
        parse_weights('R(1)\n')


def test_parse_assignment() -> None:
    theta = parse_assignment('R(1) 1\nT(2) 0\n')
    assert dict(theta) == {VarId.r(1): True, VarId.t(2): False}

    with pytest.raises(FormatError):
        parse_assignment('R(1) yes\n')

    with pytest.raises(InvalidAssignment):
        parse_assignment('R(1) 1\nR(1) 0\n')
