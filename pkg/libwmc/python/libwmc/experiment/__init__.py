from libwmc.experiment.config import ExperimentConfig, load_experiment_config
from libwmc.experiment.runner import (
        ExperimentRow, SeparationRunner, SeparationSummary, check_agreement,
        check_separation, run_separation, write_csv)


__all__ = [
        'ExperimentConfig', 'ExperimentRow', 'SeparationRunner',
        'SeparationSummary', 'check_agreement', 'check_separation',
        'load_experiment_config', 'run_separation', 'write_csv']
