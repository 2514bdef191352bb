from fractions import Fraction
from io import StringIO
from unittest.mock import patch

import pytest

from libwmc.compiler import CompileConfig, Heuristic
from libwmc.errors import LowerBoundViolation, ProbabilityMismatch
from libwmc.experiment import (
        ExperimentRow, SeparationRunner, check_agreement, check_separation,
        run_separation, write_csv)
from libwmc.experiment.runner import save_csv
from libwmc.lineage import CombinatorFn, QuerySpec, f_w

from .conftest import skip_unless_slow


@pytest.fixture
def qw() -> QuerySpec:
    return QuerySpec('qw', 3, f_w())


@pytest.fixture
def h1() -> QuerySpec:
    return QuerySpec('h1', 1, CombinatorFn.or_of(2))


def _row(mode: str, n: int, nodes: int, p: Fraction = Fraction(1, 2)
         ) -> ExperimentRow:
    return ExperimentRow('q', 1, n, mode, nodes, None, p, 1.0, 'max-occurrence')


def test_safe_query(qw) -> None:
    rows = run_separation(qw, [1])
    assert [r.mode for r in rows] == ['grounded', 'lifted', 'oracle']
    assert len({r.probability for r in rows}) == 1
    assert all(r.n == 1 and r.k == 3 and r.query_id == 'qw' for r in rows)
    assert rows[0].cache_hits is not None
    assert rows[2].nodes == 2 ** 5


def test_unsafe_query(h1) -> None:
    runner = SeparationRunner(h1, workers=2)
    rows = runner.run([1, 2])
    assert [(r.n, r.mode) for r in rows] == [
            (1, 'grounded'), (1, 'oracle'), (2, 'grounded'), (2, 'oracle')]
    assert rows[0].probability == Fraction(3, 8)


def test_oracle_cap(h1) -> None:
    rows = run_separation(h1, [1, 3], oracle_cap=4)
    assert [(r.n, r.mode) for r in rows] == [
            (1, 'grounded'), (1, 'oracle'), (3, 'grounded')]


def test_budget(h1) -> None:
    rows = run_separation(h1, [2], CompileConfig(budget=2))
    grounded = rows[0]
    assert grounded.budget_hit
    assert grounded.probability is None
    assert grounded.nodes is None
    assert grounded.as_csv()[4] == ''
    assert grounded.as_csv()[-1] == 'true'
    assert rows[1].probability is not None


def test_heuristic_column(h1) -> None:
    cfg = CompileConfig(heuristic=Heuristic.FIRST_UNSET)
    rows = run_separation(h1, [1], cfg)
    assert all(r.heuristic == 'first-unset' for r in rows)


def test_write_csv(qw, tmp_path) -> None:
    out = StringIO()
    write_csv([], out)
    assert out.getvalue() == (
            'query_id,k,n,mode,nodes,cache_hits,probability,elapsed_ms,'
            'heuristic,budget_hit\n')

    rows = run_separation(qw, [1])
    out = StringIO()
    write_csv(rows, out)
    lines = out.getvalue().splitlines()
    assert len(lines) == 4
    assert lines[2].startswith('qw,3,1,lifted,')
    assert lines[2].split(',')[5] == ''

    path = tmp_path / 'rows.csv'
    save_csv(rows, path)
    assert path.read_text() == out.getvalue()


def test_check_agreement() -> None:
    check_agreement([_row('grounded', 1, 3), _row('oracle', 1, 8)])
    check_agreement([_row('grounded', 1, 3), _row('oracle', 2, 8, Fraction(1))])
    with pytest.raises(ProbabilityMismatch):
        check_agreement([
            _row('grounded', 1, 3), _row('oracle', 1, 8, Fraction(1, 3))])


def test_check_separation() -> None:
    rows = [
            _row('lifted', 4, 20), _row('lifted', 5, 25),
            _row('grounded', 4, 100), _row('grounded', 5, 300),
            _row('grounded', 6, 1000)]
    summary = check_separation(rows)
    assert summary.lifted_polynomial
    assert summary.grounded_nondecreasing
    assert summary.grounded_superpolynomial
    assert 'grounded nondecreasing: yes' in summary.describe()

    rows = [
            _row('lifted', 2, 10 ** 6), _row('grounded', 4, 640),
            _row('grounded', 5, 500)]
    summary = check_separation(rows)
    assert not summary.lifted_polynomial
    assert not summary.grounded_nondecreasing
    assert not summary.grounded_superpolynomial


def _check_curve(rows) -> None:
    summary = check_separation(rows)
    assert summary.lifted_polynomial
    assert summary.grounded_nondecreasing
    assert summary.grounded_superpolynomial

    by_n = dict()
    for row in rows:
        assert not row.budget_hit
        by_n.setdefault(row.n, dict())[row.mode] = row
    for modes in by_n.values():
        assert modes['grounded'].probability == modes['lifted'].probability

    grounded = [by_n[n]['grounded'].nodes for n in sorted(by_n)]
    assert all(a < b for a, b in zip(grounded, grounded[1:]))


def test_qw_separation(qw) -> None:
    rows = run_separation(qw, [1, 2, 3, 4])
    _check_curve(rows)
    assert {r.n for r in rows if r.mode == 'oracle'} == {1, 2}


@skip_unless_slow
def test_qw_separation_n5(qw) -> None:
    rows = run_separation(qw, [4, 5], workers=2)
    _check_curve(rows)
    grounded = [r for r in rows if r.mode == 'grounded']
    assert grounded[1].nodes > 4 * grounded[0].nodes


def test_fbdd_lower_bound(h1) -> None:
    cfg = CompileConfig(decompose=False)
    with patch('libwmc.experiment.runner.check_lower_bound') as check:
        rows = run_separation(h1, [1, 2], cfg)
    assert [c.args[1] for c in check.call_args_list] == [1, 2]
    assert rows[0].probability == Fraction(3, 8)

    with patch('libwmc.experiment.runner.check_lower_bound') as check:
        run_separation(h1, [1, 2])
    check.assert_not_called()

    with patch(
            'libwmc.experiment.runner.check_lower_bound',
            side_effect=LowerBoundViolation('too small')):
        with pytest.raises(LowerBoundViolation):
            run_separation(h1, [1], cfg)


def test_fbdd_lower_bound_other_query(qw) -> None:
    with patch('libwmc.experiment.runner.check_lower_bound') as check:
        run_separation(qw, [1], CompileConfig(decompose=False))
    check.assert_not_called()
