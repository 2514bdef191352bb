import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Tuple

import click
from ruamel.yaml.scanner import ScannerError
from yatiml import RecognitionError

from libwmc.compiler import CompileConfig, Compiler, Heuristic, NegationMode
from libwmc.compiler.config import DEFAULT_BUDGET
from libwmc.diagrams import Diagram, evaluation, validate
from libwmc.diagrams.diagram_pack import load_pack, save_pack
from libwmc.diagrams.dot import format_dot
from libwmc.diagrams.mdd_format import format_mdd, load_mdd
from libwmc.errors import WmcLabError
from libwmc.experiment.config import ExperimentConfig, load_experiment_config
from libwmc.experiment.runner import check_separation, run_separation, write_csv
from libwmc.lifted.engine import is_safe, lifted_evaluate
from libwmc.lineage import (
        CompositeLineage, QuerySpec, flatten, load_query_spec, single)
from libwmc.logger import Logger
from libwmc.oracle import DEFAULT_CAP, brute_force_wmc
from libwmc.text_formats import (
        format_formula, load_assignment, load_formula, load_weights)
from libwmc.transforms import (
        build_dichotomy_fbdd, classify_dichotomy, dldd_to_fbdd,
        follows_unit_rule, to_unit_rule)
from libwmc.transforms.transversals import (
        hk_units_of, residual_family, transversals_of)
from libwmc.weights import UNIFORM, WeightMap


_DIAGRAM_FORMATS = ['mdd', 'dot', 'pack']


class DomainSizes(click.ParamType):
    """A list of domain sizes, written as 1..6 or 1,2,5."""
    name = 'sizes'

    def convert(
            self, value: Any, param: Optional[click.Parameter],
            ctx: Optional[click.Context]) -> List[int]:
        if isinstance(value, list):
            return value
        try:
            if '..' in value:
                first, last = value.split('..')
                sizes = list(range(int(first), int(last) + 1))
            else:
                sizes = [int(part) for part in value.split(',') if part]
        except ValueError:
            self.fail('"{}" is not a range like 1..6 or a list like 1,2,5'.format(
                value), param, ctx)
        if any(size < 1 for size in sizes):
            self.fail('Domain sizes must be at least 1', param, ctx)
        return sizes


class WmcLabGroup(click.Group):
    """Reports domain errors as one line on stderr, with exit status 2."""
    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except WmcLabError as e:
            click.echo('{}: {}'.format(type(e).__name__, e), err=True)
            raise click.exceptions.Exit(2)


_input_file = click.Path(
        exists=True, file_okay=True, dir_okay=False, readable=True,
        path_type=Path)

_output_file = click.Path(
        file_okay=True, dir_okay=False, writable=True, path_type=Path)


def _weights_option(fn: Any) -> Any:
    return click.option(
            '--weights', type=_input_file,
            help='File with tuple probabilities, 1/2 if not given.')(fn)


def _out_option(fn: Any) -> Any:
    return click.option(
            '--out', type=_output_file,
            help='Write the result to this file instead of stdout.')(fn)


def _compile_options(fn: Any) -> Any:
    fn = click.option(
            '--heuristic', type=click.Choice([h.value for h in Heuristic]),
            default=Heuristic.MAX_OCCURRENCE.value, show_default=True,
            help='How to choose the variable to branch on.')(fn)
    fn = click.option(
            '--negation-mode', type=click.Choice([m.value for m in NegationMode]),
            default=NegationMode.DIRECT_DNF.value, show_default=True,
            help='How disjunctive component splits are represented.')(fn)
    fn = click.option(
            '--budget', type=click.IntRange(min=1), default=DEFAULT_BUDGET,
            show_default=True, help='Maximum number of nodes to create.')(fn)
    return fn


@click.group(cls=WmcLabGroup)
@click.option(
        '--log-level', nargs=1, type=str, default='WARNING', show_default=True,
        help='Set the log level. Try INFO or DEBUG for more output.')
@click.option(
        '--log-file', type=_output_file,
        help='Write the log to this file instead of stderr.')
@click.pass_context
def wmclab(ctx: click.Context, log_level: str, log_file: Optional[Path]) -> None:
    """Weighted model counting lab.

    Grounds queries into lineages, compiles them into decision
    diagrams, transforms diagrams, and compares grounded against lifted
    evaluation.

    Use wmclab <command> --help for help with individual commands.
    """
    logger = Logger(log_file, log_level)
    ctx.call_on_close(logger.close)


def _load_weights(path: Optional[Path]) -> WeightMap:
    return UNIFORM if path is None else load_weights(path)


def _load_lineage(
        path: Path, n: Optional[int]
        ) -> Tuple[CompositeLineage, Optional[QuerySpec]]:
    """Loads a query spec if a size is given or the file is a .spec."""
    if n is not None or path.suffix == '.spec':
        spec = load_query_spec(path)
        return spec.lineage(n), spec
    return single(load_formula(path)), None


def _load_diagram(path: Path) -> Diagram:
    if path.suffix == '.pack':
        return load_pack(path)
    return load_mdd(path)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text)


def _write_diagram(d: Diagram, fmt: str, out: Optional[Path], name: str) -> None:
    if fmt == 'pack':
        if out is None:
            raise click.UsageError('The pack format needs --out')
        save_pack(d, out)
    elif fmt == 'dot':
        _emit(format_dot(d, name), out)
    else:
        _emit(format_mdd(d), out)


def _echo_probability(p: Fraction) -> None:
    click.echo('p = {}'.format(p))


@wmclab.command(short_help='Write the lineage of a query')
@click.argument('query_spec', type=_input_file)
@click.option('--n', type=click.IntRange(min=1), help='Domain size.')
@_out_option
def ground(query_spec: Path, n: Optional[int], out: Optional[Path]) -> None:
    """Ground a query over a domain and write its lineage as a DNF.

    The query spec's combinator must be monotone, so that the lineage
    can be written as a single monotone DNF.
    """
    spec = load_query_spec(query_spec)
    _emit(format_formula(flatten(spec.lineage(n))), out)


@wmclab.command('compile', short_help='Compile a lineage into a diagram')
@click.argument('lineage', type=_input_file)
@click.option('--n', type=click.IntRange(min=1), help='Domain size for a query spec.')
@_compile_options
@click.option(
        '--fbdd', is_flag=True,
        help='Do not split into components, producing an FBDD.')
@click.option(
        '--no-cache', is_flag=True, help='Do not reuse compiled residuals.')
@_weights_option
@click.option(
        '--format', 'fmt', type=click.Choice(_DIAGRAM_FORMATS), default='mdd',
        show_default=True, help='Output format.')
@_out_option
def compile_lineage(
        lineage: Path, n: Optional[int], heuristic: str, negation_mode: str,
        budget: int, fbdd: bool, no_cache: bool, weights: Optional[Path],
        fmt: str, out: Optional[Path]) -> None:
    """Compile a formula file or a query spec.

    Takes a DNF formula file, or a query spec together with --n, runs
    the grounded compiler, and writes the resulting trace. Statistics
    and the probability go to stderr, or to stdout if --out is given.
    """
    psi, _ = _load_lineage(lineage, n)
    cfg = CompileConfig(
            Heuristic(heuristic), NegationMode(negation_mode), budget,
            cache=not no_cache, decompose=not fbdd)
    diagram, stats = Compiler(cfg).compile(psi)
    p = evaluation.wmc(diagram, _load_weights(weights))[0]
    _write_diagram(diagram, fmt, out, lineage.stem)
    summary = 'nodes = {}, cache hits = {}, p = {}'.format(
            len(diagram), stats.cache_hits, p)
    click.echo(summary, err=out is None)


@wmclab.command(short_help='Convert a DLDD into an FBDD')
@click.argument('diagram', type=_input_file)
@click.option(
        '--budget', type=click.IntRange(min=1), default=DEFAULT_BUDGET,
        show_default=True, help='Maximum number of nodes to create.')
@click.option(
        '--format', 'fmt', type=click.Choice(_DIAGRAM_FORMATS), default='mdd',
        show_default=True, help='Output format.')
@_out_option
def convert(diagram: Path, budget: int, fmt: str, out: Optional[Path]) -> None:
    """Convert a decomposable logic decision diagram into an FBDD."""
    result = dldd_to_fbdd(_load_diagram(diagram), budget)
    _write_diagram(result, fmt, out, diagram.stem)


@wmclab.command(short_help='Make an FBDD follow the unit rule')
@click.argument('diagram', type=_input_file)
@click.argument('formula', type=_input_file)
@click.option(
        '--check', is_flag=True,
        help='Only report whether the FBDD already follows the unit rule.')
@click.option(
        '--format', 'fmt', type=click.Choice(_DIAGRAM_FORMATS), default='mdd',
        show_default=True, help='Output format.')
@_out_option
def unitrule(
        diagram: Path, formula: Path, check: bool, fmt: str,
        out: Optional[Path]) -> None:
    """Rewrite an FBDD for a monotone formula to follow the unit rule.

    The unit rule requires that every node whose residual formula has
    a unit tests one of those units.
    """
    d = _load_diagram(diagram)
    phi = load_formula(formula)
    if check:
        follows = follows_unit_rule(d, phi)
        click.echo('follows unit rule: {}'.format('yes' if follows else 'no'))
    else:
        _write_diagram(to_unit_rule(d, phi), fmt, out, diagram.stem)


@wmclab.command(short_help='List the transversals of an assignment')
@click.argument('assignment', type=_input_file)
@click.option('--k', type=click.IntRange(min=1), required=True, help='Query parameter.')
@click.option('--n', type=click.IntRange(min=1), required=True, help='Domain size.')
def transversals(assignment: Path, k: int, n: int) -> None:
    """Find the transversals and H_k-units of a partial assignment."""
    theta = load_assignment(assignment)
    residuals = residual_family(theta, k, n)
    found = transversals_of(residuals, k, n)
    pairs = ' '.join('({},{})'.format(i, j) for i, j in sorted(found.pairs))
    click.echo('transversals: {}'.format(pairs or 'none'))
    click.echo('independent: {}'.format(found.max_independent))
    units = hk_units_of(residuals, k, n, found)
    click.echo('hk-units: {}'.format(
        ' '.join(str(v) for v in sorted(units)) or 'none'))


@wmclab.command(short_help='Evaluate a safe query by lifted inference')
@click.argument('query_spec', type=_input_file)
@click.option('--n', type=click.IntRange(min=1), help='Domain size.')
@_weights_option
@click.option(
        '--format', 'fmt', type=click.Choice(['text', 'csv']), default='text',
        show_default=True, help='Print the probability, or a CSV term table.')
@_out_option
def lifted(
        query_spec: Path, n: Optional[int], weights: Optional[Path], fmt: str,
        out: Optional[Path]) -> None:
    """Compute the probability of a safe query by inclusion-exclusion.

    Each term is the probability of a disjunction of subqueries, which
    is computed on an OBDD of polynomial size.
    """
    spec = load_query_spec(query_spec)
    size = n if n is not None else spec.n
    if size is None:
        raise click.UsageError('No domain size given, use --n')
    result = lifted_evaluate(spec.combinator, spec.k, size, _load_weights(weights))
    if fmt == 'csv':
        lines = ['element,mu,probability']
        for term in result.terms:
            element = ' '.join(str(i) for i in sorted(term.element))
            lines.append('{},{},{}'.format(element, term.mobius, term.probability))
        _emit('\n'.join(lines) + '\n', out)
    else:
        _emit('p = {}\ndecimal = {:.12g}\n'.format(
            result.probability, float(result.probability)), out)


@wmclab.command(short_help='Compute a probability by enumeration')
@click.argument('lineage', type=_input_file)
@click.option('--n', type=click.IntRange(min=1), help='Domain size for a query spec.')
@_weights_option
@click.option(
        '--cap', type=click.IntRange(min=0), default=DEFAULT_CAP,
        show_default=True, help='Maximum number of variables.')
def oracle(
        lineage: Path, n: Optional[int], weights: Optional[Path], cap: int
        ) -> None:
    """Compute the exact probability of a lineage by brute force."""
    psi, _ = _load_lineage(lineage, n)
    _echo_probability(brute_force_wmc(psi, _load_weights(weights), cap))


@wmclab.command(short_help='Classify a query')
@click.argument('query_spec', type=_input_file)
def classify(query_spec: Path) -> None:
    """Classify a query.

    Dichotomy queries (arity 2k+3) are Hard if every FBDD for them has
    exponential size, and Easy otherwise. Other queries are safe if
    lifted inference evaluates them in polynomial time.
    """
    spec = load_query_spec(query_spec)
    if spec.is_dichotomy:
        click.echo(str(classify_dichotomy(spec.combinator, spec.k)))
    elif spec.k == 0 or not is_safe(spec.combinator):
        click.echo('unsafe')
    else:
        click.echo('safe')


@wmclab.command(short_help='Build an FBDD for an easy dichotomy query')
@click.argument('query_spec', type=_input_file)
@click.option('--n', type=click.IntRange(min=1), help='Domain size.')
@click.option(
        '--format', 'fmt', type=click.Choice(_DIAGRAM_FORMATS), default='mdd',
        show_default=True, help='Output format.')
@_out_option
def dicho(
        query_spec: Path, n: Optional[int], fmt: str, out: Optional[Path]
        ) -> None:
    """Build the layered polynomial-size FBDD for an easy query."""
    spec = load_query_spec(query_spec)
    size = n if n is not None else spec.n
    if size is None:
        raise click.UsageError('No domain size given, use --n')
    if not spec.is_dichotomy:
        raise click.UsageError('Expected a query spec with arity 2k+3')
    _write_diagram(
            build_dichotomy_fbdd(spec.combinator, spec.k, size), fmt, out,
            query_spec.stem)


@wmclab.command(short_help='Compare grounded and lifted evaluation')
@click.argument('query_spec', type=_input_file, required=False)
@click.option(
        '--config', 'config_file', type=_input_file,
        help='YAML file describing the experiment.')
@click.option('--n', 'sizes', type=DomainSizes(), help='Domain sizes, e.g. 1..6.')
@click.option(
        '--heuristic', type=click.Choice([h.value for h in Heuristic]),
        help='How to choose the variable to branch on.')
@click.option(
        '--negation-mode', type=click.Choice([m.value for m in NegationMode]),
        help='How disjunctive component splits are represented.')
@click.option(
        '--budget', type=click.IntRange(min=1),
        help='Node budget per grounded compilation.')
@click.option(
        '--oracle-cap', type=click.IntRange(min=0),
        help='Largest number of variables to enumerate.')
@_weights_option
@click.option('--workers', type=click.IntRange(min=1), help='Concurrent cells.')
@click.option(
        '--summary', is_flag=True, help='Print growth trends to stderr.')
@_out_option
def experiment(
        query_spec: Optional[Path], config_file: Optional[Path],
        sizes: Optional[List[int]], heuristic: Optional[str],
        negation_mode: Optional[str], budget: Optional[int],
        oracle_cap: Optional[int], weights: Optional[Path],
        workers: Optional[int], summary: bool, out: Optional[Path]) -> None:
    """Run the separation experiment and write CSV rows.

    For every domain size, compiles the grounded lineage, evaluates the
    query by lifted inference if it is safe, and enumerates if there are
    few enough variables. The settings may come from a YAML file given
    with --config; options on the command line take precedence.
    """
    if config_file is not None:
        try:
            config = load_experiment_config(config_file)
        except (RecognitionError, ScannerError) as e:
            raise click.UsageError('Invalid experiment file {}:\n{}'.format(
                config_file, e))
    elif query_spec is not None:
        config = ExperimentConfig(str(query_spec), [])
    else:
        raise click.UsageError('Give a query spec or --config')

    if query_spec is not None:
        config.query = str(query_spec)
    if sizes is not None:
        config.n = sizes
    if heuristic is not None:
        config.heuristic = heuristic
    if negation_mode is not None:
        config.negation_mode = negation_mode
    if budget is not None:
        config.budget = budget
    if oracle_cap is not None:
        config.oracle_cap = oracle_cap
    if weights is not None:
        config.weights = str(weights)
    if workers is not None:
        config.workers = workers

    spec = load_query_spec(Path(config.query))
    if not config.n:
        if spec.n is None:
            raise click.UsageError('No domain sizes given, use --n')
        config.n = [spec.n]
    w = _load_weights(None if config.weights is None else Path(config.weights))
    rows = run_separation(
            spec, config.n, config.compile_config(), w, config.oracle_cap,
            config.workers)
    if out is None:
        write_csv(rows, sys.stdout)
    else:
        with out.open('w', newline='') as f:
            write_csv(rows, f)
    if summary:
        click.echo(check_separation(rows).describe(), err=True)


@wmclab.command('validate', short_help='Check and classify a diagram')
@click.argument('diagram', type=_input_file)
def validate_diagram(diagram: Path) -> None:
    """Check read-once-ness and decomposability of a diagram.

    Prints the most specific class, FBDD, dec-DNNF or DLDD, or invalid
    with a witness of the problem.
    """
    click.echo(validate(_load_diagram(diagram)).describe())


def main() -> None:
    """Runs the command line interface.

    Exits with status 0 on success, 1 on usage errors and 2 on domain
    errors.
    """
    try:
        status = wmclab.main(standalone_mode=False)
    except click.ClickException as e:
        e.show()
        sys.exit(1)
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        sys.exit(1)
    sys.exit(status if isinstance(status, int) else 0)


if __name__ == '__main__':
    main()
