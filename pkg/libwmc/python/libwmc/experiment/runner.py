"""Runs grounded, lifted and brute-force evaluation over domain sizes.

Every (mode, n) combination is a cell. Cells are independent and may
run on a thread pool; each grounded cell has its own compiler, and so
its own cache. Rows come out in a fixed order regardless of timing.
"""
from concurrent.futures import ThreadPoolExecutor
import csv
from dataclasses import dataclass
from fractions import Fraction
import logging
from pathlib import Path
import time
from typing import (
        Callable, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple)

from libwmc.compiler.compiler import Compiler
from libwmc.compiler.config import CompileConfig
from libwmc.diagrams.evaluation import wmc
from libwmc.errors import BudgetExhausted, ProbabilityMismatch
from libwmc.lifted.engine import is_safe, lifted_evaluate
from libwmc.lineage.query_spec import QuerySpec
from libwmc.oracle import DEFAULT_CAP, brute_force_wmc
from libwmc.transforms.sanity import check_lower_bound
from libwmc.weights import UNIFORM, WeightMap


_logger = logging.getLogger(__name__)

CSV_COLUMNS = (
        'query_id', 'k', 'n', 'mode', 'nodes', 'cache_hits', 'probability',
        'elapsed_ms', 'heuristic', 'budget_hit')

GROUNDED = 'grounded'
LIFTED = 'lifted'
ORACLE = 'oracle'

# Lifted OBDD nodes per n^2 that still count as polynomial
LIFTED_NODE_CONSTANT = 8192


@dataclass
class ExperimentRow:
    """One line of the experiment CSV.

    The probability is None if and only if the run did not complete.
    """
    query_id: str
    k: int
    n: int
    mode: str
    nodes: Optional[int]
    cache_hits: Optional[int]
    probability: Optional[Fraction]
    elapsed_ms: float
    heuristic: str
    budget_hit: bool = False

    def as_csv(self) -> List[str]:
        def text(value: Optional[object]) -> str:
            return '' if value is None else str(value)

        return [
                self.query_id, str(self.k), str(self.n), self.mode,
                text(self.nodes), text(self.cache_hits), text(self.probability),
                '{:.3f}'.format(self.elapsed_ms), self.heuristic,
                'true' if self.budget_hit else 'false']


def write_csv(rows: Iterable[ExperimentRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())


def save_csv(rows: Iterable[ExperimentRow], path: Path) -> None:
    with path.open('w', newline='') as f:
        write_csv(rows, f)


class SeparationRunner:
    """Runs the separation experiment for one query.

    When decomposition is off, the grounded diagrams are FBDDs, and
    for h_k their size is checked against the FBDD lower bound.

    Args:
        spec: The query.
        cfg: Settings for the grounded compiler.
        w: Tuple probabilities.
        oracle_cap: Largest variable count to enumerate.
        workers: Number of cells to run concurrently.
    """
    def __init__(
            self, spec: QuerySpec, cfg: CompileConfig = CompileConfig(),
            w: WeightMap = UNIFORM, oracle_cap: int = DEFAULT_CAP,
            workers: int = 1) -> None:
        self._spec = spec
        self._cfg = cfg
        self._w = w
        self._oracle_cap = oracle_cap
        self._workers = workers
        self._lifted_ok = self._can_lift()

    def _can_lift(self) -> bool:
        spec = self._spec
        if spec.k == 0 or spec.is_dichotomy:
            return False
        if not is_safe(spec.combinator):
            _logger.warning(
                    'Query {} is not safe, lifted evaluation refused'.format(
                        spec.name))
            return False
        return True

    def _row(self, mode: str, n: int, nodes: Optional[int],
             cache_hits: Optional[int], probability: Optional[Fraction],
             start: float, budget_hit: bool = False) -> ExperimentRow:
        return ExperimentRow(
                self._spec.name, self._spec.k, n, mode, nodes, cache_hits,
                probability, (time.perf_counter() - start) * 1000.0,
                self._cfg.heuristic.value, budget_hit)

    def grounded(self, n: int) -> ExperimentRow:
        start = time.perf_counter()
        try:
            diagram, stats = Compiler(self._cfg).compile(self._spec.lineage(n))
        except BudgetExhausted as e:
            stats = e.stats
            return self._row(
                    GROUNDED, n, None,
                    stats.cache_hits if stats is not None else None, None,
                    start, True)
        if not self._cfg.decompose and self._spec.is_hk:
            check_lower_bound(diagram, n)
        probability = wmc(diagram, self._w)[0]
        return self._row(
                GROUNDED, n, len(diagram), stats.cache_hits, probability, start)

    def lifted(self, n: int) -> ExperimentRow:
        start = time.perf_counter()
        result = lifted_evaluate(
                self._spec.combinator, self._spec.k, n, self._w)
        return self._row(
                LIFTED, n, max(result.total_nodes, 1), None, result.probability,
                start)

    def oracle(self, n: int) -> ExperimentRow:
        start = time.perf_counter()
        lineage = self._spec.lineage(n)
        probability = brute_force_wmc(lineage, self._w, self._oracle_cap)
        return self._row(
                ORACLE, n, 2 ** len(lineage.variables()), None, probability,
                start)

    def _cells(self, n_list: Sequence[int]
               ) -> List[Tuple[int, Callable[[int], ExperimentRow]]]:
        cells: List[Tuple[int, Callable[[int], ExperimentRow]]] = list()
        for n in n_list:
            cells.append((n, self.grounded))
            if self._lifted_ok:
                cells.append((n, self.lifted))
            lineage = self._spec.lineage(n)
            if len(lineage.variables()) <= self._oracle_cap:
                cells.append((n, self.oracle))
        return cells

    def run(self, n_list: Sequence[int]) -> List[ExperimentRow]:
        """Runs all cells for the given domain sizes.

        Returns:
            The rows, ordered by n and then by mode.

        Raises:
            ProbabilityMismatch: If two completed runs for the same n
                    disagree.
            LowerBoundViolation: If an FBDD for h_k is impossibly small.
        """
        cells = self._cells(n_list)
        _logger.info('Running {} cells for query {}'.format(
            len(cells), self._spec.name))
        with ThreadPoolExecutor(max_workers=self._workers) as executor:
            futures = [executor.submit(fn, n) for n, fn in cells]
            rows = [future.result() for future in futures]
        check_agreement(rows)
        return rows


def check_agreement(rows: Iterable[ExperimentRow]) -> None:
    """Checks that all completed rows with the same n agree.

    Raises:
        ProbabilityMismatch: If they do not.
    """
    seen: Dict[Tuple[str, int], ExperimentRow] = dict()
    for row in rows:
        if row.probability is None:
            continue
        key = (row.query_id, row.n)
        if key in seen and seen[key].probability != row.probability:
            other = seen[key]
            raise ProbabilityMismatch(
                    'For n = {}, {} gives {} but {} gives {}'.format(
                        row.n, other.mode, other.probability, row.mode,
                        row.probability))
        seen.setdefault(key, row)


def run_separation(
        spec: QuerySpec, n_list: Sequence[int],
        cfg: CompileConfig = CompileConfig(), w: WeightMap = UNIFORM,
        oracle_cap: int = DEFAULT_CAP, workers: int = 1
        ) -> List[ExperimentRow]:
    """Runs the separation experiment; see SeparationRunner."""
    return SeparationRunner(spec, cfg, w, oracle_cap, workers).run(n_list)


@dataclass
class SeparationSummary:
    """Growth trends of an experiment's node counts.

    Attributes:
        lifted_polynomial: Every lifted run used at most C n^2 nodes.
        grounded_nondecreasing: Grounded sizes never shrink as n grows.
        grounded_superpolynomial: Grounded size / n^3 strictly increases
                over the completed runs with n >= 4.
    """
    lifted_polynomial: bool
    grounded_nondecreasing: bool
    grounded_superpolynomial: bool

    def describe(self) -> str:
        def yes(flag: bool) -> str:
            return 'yes' if flag else 'no'

        return (
                'lifted within C n^2: {}\n'
                'grounded nondecreasing: {}\n'
                'grounded size / n^3 increasing: {}').format(
                    yes(self.lifted_polynomial),
                    yes(self.grounded_nondecreasing),
                    yes(self.grounded_superpolynomial))


def check_separation(
        rows: Iterable[ExperimentRow],
        lifted_constant: int = LIFTED_NODE_CONSTANT) -> SeparationSummary:
    """Summarizes whether the rows show the lifted/grounded separation."""
    lifted_ok = True
    grounded: List[Tuple[int, int]] = list()
    for r in rows:
        if r.nodes is None:
            continue
        if r.mode == LIFTED and r.nodes > lifted_constant * r.n ** 2:
            lifted_ok = False
        elif r.mode == GROUNDED:
            grounded.append((r.n, r.nodes))
    grounded.sort()

    sizes = [nodes for _, nodes in grounded]
    nondecreasing = all(a <= b for a, b in zip(sizes, sizes[1:]))
    ratios = [Fraction(nodes, n ** 3) for n, nodes in grounded if n >= 4]
    increasing = all(a < b for a, b in zip(ratios, ratios[1:]))
    return SeparationSummary(lifted_ok, nondecreasing, increasing)
