"""Crossover comparison: many GA instances per crossover kind."""

import logging
from dataclasses import replace
from typing import Dict, List, Sequence

from scipy.stats import mannwhitneyu

from ..models import ErrorSet, GaConfig, GaOutcome
from ..rng import derive_seed
from .campaign import TaskFailed, _ga_task, fan_out

logger = logging.getLogger(__name__)


def compare_crossovers(
    base: GaConfig,
    error_set: ErrorSet,
    kinds: Sequence[str],
    instances: int,
    seed: int = 0,
    jobs: int = 1,
    quiet: bool = False,
) -> Dict[str, List[GaOutcome]]:
    """Run ``instances`` GA runs per kind; instance i gets the same seed for every kind."""
    outcomes: Dict[str, List[GaOutcome]] = {}
    for kind in kinds:
        configs = [
            (replace(base, crossover=kind, seed=derive_seed(seed, index)), error_set)
            for index in range(instances)
        ]
        runs = []
        for outcome in fan_out(_ga_task, configs, jobs, f"GA ({kind})", quiet):
            if isinstance(outcome, TaskFailed):
                logger.error(f"GA instance ({kind}) failed: {outcome.message}")
                continue
            runs.append(outcome)
        outcomes[kind] = runs
        if runs:
            mean = sum(o.best_fitness for o in runs) / len(runs)
            logger.info(f"{kind}: mean best fitness {mean:.2f} over {len(runs)} instances")
    return outcomes


def elitism_monotone(outcome: GaOutcome) -> bool:
    history = outcome.best_history
    return all(a <= b for a, b in zip(history, history[1:]))


def one_sided_pvalues(outcomes: Dict[str, List[GaOutcome]], reference: str = "spectral") -> Dict[str, float]:
    """Mann-Whitney p-values for 'reference has larger final best fitness than kind'."""
    if reference not in outcomes:
        raise ValueError(f"No runs for reference crossover {reference!r}")
    ref = [o.best_fitness for o in outcomes[reference]]
    pvalues = {}
    for kind, runs in outcomes.items():
        if kind == reference or not runs or not ref:
            continue
        other = [o.best_fitness for o in runs]
        pvalues[kind] = float(mannwhitneyu(ref, other, alternative="greater").pvalue)
    return pvalues
