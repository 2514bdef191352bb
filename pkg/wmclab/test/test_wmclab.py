from pathlib import Path
from unittest.mock import patch

import click
from click.testing import CliRunner, Result
import pytest

from wmclab.wmclab import DomainSizes, main, wmclab


@pytest.fixture
def files(tmp_path: Path) -> Path:
    (tmp_path / 'h1.spec').write_text('name=h1\nk=1\ncnf: 0 1\n')
    (tmp_path / 'qw.spec').write_text('name=qw\nk=3\nn=1\ncnf: 0 2 | 0 3 | 1 3\n')
    (tmp_path / 'easy.spec').write_text('k=1\narity=5\ncnf: 0 4 | 2 1\n')
    (tmp_path / 'hard.spec').write_text('k=1\narity=5\ncnf: 0 1 | 3\n')
    (tmp_path / 'xy.dnf').write_text('X Y\n')
    (tmp_path / 'unit.dnf').write_text('X\nY Z\n')
    (tmp_path / 'bad.dnf').write_text('X $Y\n')
    (tmp_path / 'x.w').write_text('X 1/3\n')
    (tmp_path / 'theta.txt').write_text('R(1) 0\n')
    (tmp_path / 'fbdd.mdd').write_text('mdd 3 1 1\nS 0\nS 1\nD 0 0 1\nmap 0 X\n')
    (tmp_path / 'shared.mdd').write_text(
            'mdd 5 1 1\nS 0\nS 1\nD 0 0 1\nD 0 1 0\nA 2 3\nmap 0 X\n')
    return tmp_path


def run(*args: object) -> Result:
    return CliRunner().invoke(wmclab, [str(a) for a in args])


def test_oracle(files: Path) -> None:
    result = run('oracle', files / 'h1.spec', '--n', 1)
    assert result.exit_code == 0
    assert result.output == 'p = 3/8\n'

    result = run('oracle', files / 'xy.dnf')
    assert result.output == 'p = 1/4\n'

    result = run('oracle', files / 'xy.dnf', '--weights', files / 'x.w')
    assert result.output == 'p = 1/6\n'

    result = run('oracle', files / 'h1.spec', '--n', 2, '--cap', 3)
    assert result.exit_code == 2
    assert 'TooLarge:' in result.output


def test_ground(files: Path) -> None:
    result = run('ground', files / 'h1.spec', '--n', 1)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert sorted(lines) == ['R(1) S1(1,1)', 'S1(1,1) T(1)']


def test_compile(files: Path) -> None:
    result = run('compile', files / 'xy.dnf')
    assert result.exit_code == 0
    assert result.output.startswith('mdd ')
    assert 'p = 1/4' in result.output

    out = files / 'or.mdd'
    result = run('compile', files / 'h1.spec', '--n', 2, '--out', out)
    assert result.exit_code == 0
    assert result.output.startswith('nodes = ')
    assert out.read_text().startswith('mdd ')

    result = run(
            'compile', files / 'xy.dnf', '--format', 'dot', '--fbdd',
            '--heuristic', 'first-unset', '--no-cache')
    assert result.exit_code == 0
    assert 'digraph' in result.output

    result = run('compile', files / 'h1.spec', '--n', 2, '--budget', 2)
    assert result.exit_code == 2
    assert 'BudgetExhausted:' in result.output


def test_pack(files: Path) -> None:
    pack = files / 'xy.pack'
    result = run('compile', files / 'xy.dnf', '--format', 'pack', '--out', pack)
    assert result.exit_code == 0
    assert pack.stat().st_size > 0

    result = run('validate', pack)
    assert result.output == 'FBDD\n'

    result = run('compile', files / 'xy.dnf', '--format', 'pack')
    assert result.exit_code != 0
    assert '--out' in result.output


def test_validate(files: Path) -> None:
    assert run('validate', files / 'fbdd.mdd').output == 'FBDD\n'
    result = run('validate', files / 'shared.mdd')
    assert result.exit_code == 0
    assert result.output.startswith('invalid: ')


def test_convert(files: Path) -> None:
    dldd = files / 'unit_dldd.mdd'
    (files / 'or.dnf').write_text('X\nY Z\n')
    run('compile', files / 'or.dnf', '--out', dldd)
    assert run('validate', dldd).output == 'DLDD\n'

    fbdd = files / 'converted.mdd'
    result = run('convert', dldd, '--out', fbdd)
    assert result.exit_code == 0
    assert run('validate', fbdd).output == 'FBDD\n'
    assert run('oracle', files / 'or.dnf').output == 'p = 5/8\n'

    result = run('convert', files / 'shared.mdd')
    assert result.exit_code == 2
    assert 'InvalidDiagram:' in result.output


def test_unitrule(files: Path) -> None:
    fbdd = files / 'unit.mdd'
    run('compile', files / 'unit.dnf', '--fbdd', '--out', fbdd)
    result = run('unitrule', fbdd, files / 'unit.dnf', '--check')
    assert result.output.startswith('follows unit rule: ')

    rewritten = files / 'rewritten.mdd'
    result = run('unitrule', fbdd, files / 'unit.dnf', '--out', rewritten)
    assert result.exit_code == 0
    result = run('unitrule', rewritten, files / 'unit.dnf', '--check')
    assert result.output == 'follows unit rule: yes\n'


def test_transversals(files: Path) -> None:
    result = run('transversals', files / 'theta.txt', '--k', 1, '--n', 2)
    assert result.exit_code == 0
    assert result.output.splitlines() == [
            'transversals: (2,1) (2,2)', 'independent: 1',
            'hk-units: R(2) S1(2,1) S1(2,2)']


def test_lifted(files: Path) -> None:
    lifted = run('lifted', files / 'qw.spec')
    assert lifted.exit_code == 0
    assert lifted.output.startswith('p = ')
    oracle = run('oracle', files / 'qw.spec')
    assert lifted.output.splitlines()[0] == oracle.output.strip()

    result = run('lifted', files / 'qw.spec', '--n', 2, '--format', 'csv')
    lines = result.output.splitlines()
    assert lines[0] == 'element,mu,probability'
    assert len(lines) == 6
    assert lines[1].startswith('0 2,-1,')

    result = run('lifted', files / 'h1.spec', '--n', 1)
    assert result.exit_code == 2
    assert 'UnsafeQuery:' in result.output

    result = run('lifted', files / 'h1.spec')
    assert result.exit_code != 0
    assert '--n' in result.output


def test_classify(files: Path) -> None:
    assert run('classify', files / 'qw.spec').output == 'safe\n'
    assert run('classify', files / 'h1.spec').output == 'unsafe\n'
    assert run('classify', files / 'easy.spec').output == 'Easy(s=0)\n'
    assert run('classify', files / 'hard.spec').output == 'Hard\n'


def test_dicho(files: Path) -> None:
    result = run('dicho', files / 'easy.spec', '--n', 1)
    assert result.exit_code == 0
    assert result.output.startswith('mdd ')

    result = run('dicho', files / 'hard.spec', '--n', 1)
    assert result.exit_code == 2
    assert 'Refused:' in result.output

    result = run('dicho', files / 'qw.spec')
    assert result.exit_code != 0


def test_experiment(files: Path) -> None:
    result = run('experiment', files / 'qw.spec', '--summary')
    assert result.exit_code == 0
    assert 'query_id,k,n,mode,' in result.output
    assert 'qw,3,1,lifted,' in result.output
    assert 'lifted within C n^2: yes' in result.output

    out = files / 'rows.csv'
    result = run('experiment', files / 'h1.spec', '--n', '1..2', '--out', out)
    assert result.exit_code == 0
    assert len(out.read_text().splitlines()) == 5

    config = files / 'experiment.yml'
    config.write_text('query: h1.spec\nn: [1]\nheuristic: first-unset\n')
    result = run('experiment', '--config', config)
    assert result.exit_code == 0
    assert 'h1,1,1,grounded,' in result.output
    assert 'first-unset' in result.output

    config.write_text('query: h1.spec\nflavour: [1]\n')
    result = run('experiment', '--config', config)
    assert result.exit_code != 0
    assert 'Invalid experiment file' in result.output

    result = run('experiment', files / 'h1.spec')
    assert result.exit_code != 0
    assert 'No domain sizes' in result.output

    assert run('experiment').exit_code != 0
    assert run('experiment', files / 'h1.spec', '--n', '0..2').exit_code != 0


def test_domain_sizes() -> None:
    sizes = DomainSizes()
    assert sizes.convert('1..4', None, None) == [1, 2, 3, 4]
    assert sizes.convert('1,2,5', None, None) == [1, 2, 5]
    assert sizes.convert([3], None, None) == [3]
    with pytest.raises(click.BadParameter):
        sizes.convert('one', None, None)


def test_log_file(files: Path) -> None:
    log = files / 'wmclab.log'
    result = run(
            '--log-level', 'info', '--log-file', log, 'compile',
            files / 'xy.dnf')
    assert result.exit_code == 0
    text = log.read_text()
    assert text.startswith('wmclab ')
    assert 'Compiled to' in text


def test_main(files: Path, capsys) -> None:
    argv = ['wmclab', 'oracle', str(files / 'h1.spec'), '--n', '1']
    with patch('sys.argv', argv), pytest.raises(SystemExit) as e:
        main()
    assert e.value.code == 0
    assert capsys.readouterr().out == 'p = 3/8\n'


def test_main_usage_error(files: Path, capsys) -> None:
    argv = ['wmclab', 'compile', str(files / 'xy.dnf'), '--format', 'pack']
    with patch('sys.argv', argv), pytest.raises(SystemExit) as e:
        main()
    assert e.value.code == 1
    assert '--out' in capsys.readouterr().err


def test_main_domain_error(files: Path, capsys) -> None:
    argv = ['wmclab', 'lifted', str(files / 'h1.spec'), '--n', '1']
    with patch('sys.argv', argv), pytest.raises(SystemExit) as e:
        main()
    assert e.value.code == 2
    assert capsys.readouterr().err.startswith('UnsafeQuery: ')


@pytest.mark.parametrize('args, status, message', [
        (['oracle', 'h1.spec', '--n', '1'], 0, ''),
        (['lifted', 'h1.spec'], 1, 'No domain size given'),
        (['compile', 'bad.dnf'], 2, 'FormatError: ')])
def test_exit_status(files: Path, capsys, args, status, message) -> None:
    argv = ['wmclab', args[0], str(files / args[1])] + args[2:]
    with patch('sys.argv', argv), pytest.raises(SystemExit) as e:
        main()
    assert e.value.code == status
    assert message in capsys.readouterr().err


def test_group_status(files: Path, capsys) -> None:
    status = wmclab.main(
            ['compile', str(files / 'bad.dnf')], standalone_mode=False)
    assert status == 2
    assert capsys.readouterr().err.startswith('FormatError: ')

    with pytest.raises(click.UsageError):
        wmclab.main(['lifted', str(files / 'h1.spec')], standalone_mode=False)
