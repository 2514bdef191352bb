from pathlib import Path
from typing import List, Optional

import yatiml

from libwmc.compiler.config import (
        DEFAULT_BUDGET, CompileConfig, Heuristic, NegationMode)
from libwmc.oracle import DEFAULT_CAP


class ExperimentConfig:
    """Settings for a separation experiment.

    Attributes:
        query: Path of the query spec file.
        n: Domain sizes to run.
        heuristic: Value of a Heuristic, e.g. max-occurrence.
        negation_mode: Value of a NegationMode, e.g. direct-dnf.
        budget: Node budget per grounded compilation.
        cache: Whether the compiler caches residuals.
        oracle_cap: Largest variable count to run the oracle on.
        weights: Path of a weights file, or None for 1/2 everywhere.
        workers: Number of cells to run concurrently.
    """
    def __init__(
            self, query: str, n: List[int],
            heuristic: str = Heuristic.MAX_OCCURRENCE.value,
            negation_mode: str = NegationMode.DIRECT_DNF.value,
            budget: int = DEFAULT_BUDGET, cache: bool = True,
            oracle_cap: int = DEFAULT_CAP, weights: Optional[str] = None,
            workers: int = 1) -> None:
        if workers < 1:
            raise ValueError('At least one worker is needed')
        if any(size < 1 for size in n):
            raise ValueError('Domain sizes must be at least 1')
        self.query = query
        self.n = n
        self.heuristic = heuristic
        self.negation_mode = negation_mode
        self.budget = budget
        self.cache = cache
        self.oracle_cap = oracle_cap
        self.weights = weights
        self.workers = workers

    def compile_config(self) -> CompileConfig:
        """Returns the compiler settings.

        Raises:
            ValueError: If the heuristic or negation mode is unknown.
        """
        return CompileConfig(
                heuristic=Heuristic(self.heuristic),
                negation_mode=NegationMode(self.negation_mode),
                budget=self.budget, cache=self.cache)

    def resolve(self, base: Path) -> None:
        """Makes relative file paths relative to base."""
        self.query = str(base / self.query)
        if self.weights is not None:
            self.weights = str(base / self.weights)


_load = yatiml.load_function(ExperimentConfig)

dumps = yatiml.dumps_function(ExperimentConfig)


def load_experiment_config(path: Path) -> ExperimentConfig:
    """Loads an experiment description from a YAML file.

    Relative paths in the file are taken relative to its directory.

    Raises:
        yatiml.RecognitionError: If the file does not describe an
                experiment.
    """
    config = _load(path)
    config.resolve(path.parent)
    return config
