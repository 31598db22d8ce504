"""Generational genetic algorithm over graphs."""

import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..bitgraph import random_graph
from ..cwsmap import clique_graph_order
from ..models import ErrorSet, GaConfig, GaOutcome, Graph
from ..rng import RngLike, as_rng
from .crossover import crossover_graphs, mutate

logger = logging.getLogger(__name__)

Fitness = Callable[[Graph], int]


class CliqueOrderFitness:
    """Clique graph order |N_E| of a graph for a fixed error set."""

    def __init__(self, error_set: ErrorSet):
        self.error_set = error_set

    def __call__(self, g: Graph) -> int:
        return clique_graph_order(g, self.error_set).order


class GeneticAlgorithm:
    """Tournament selection with elitism; see GaConfig for the knobs."""

    def __init__(self, config: GaConfig, fitness: Fitness):
        self.config = config
        self.fitness = fitness
        self.rng = as_rng(config.seed)
        self._scores: Dict[Graph, int] = {}
        self.logger = logging.getLogger(self.__class__.__name__)

    def score(self, g: Graph) -> int:
        if g not in self._scores:
            self._scores[g] = int(self.fitness(g))
        return self._scores[g]

    def tournament(self, population: List[Graph], scores: List[int]) -> Graph:
        """Fittest of a random subset; ties go to the lowest population index."""
        entrants = np.sort(self.rng.choice(len(population), size=self.config.tournament, replace=False))
        winner = max(entrants, key=lambda k: (scores[k], -k))
        return population[int(winner)]

    def breed(self, population: List[Graph], scores: List[int]) -> List[Graph]:
        cfg = self.config
        ranked = sorted(range(len(population)), key=lambda k: (-scores[k], k))
        children = [population[k] for k in ranked[:cfg.elitism]]
        while len(children) < cfg.population:
            a = self.tournament(population, scores)
            b = self.tournament(population, scores)
            if self.rng.random() < cfg.crossover_prob:
                pair: Tuple[Graph, Graph] = crossover_graphs(cfg.crossover, a, b, self.rng, cfg.exchange_prob)
            else:
                pair = (a, b)
            for child in pair:
                if self.rng.random() < cfg.mutation_prob:
                    child = mutate(child, self.rng, cfg.mutation)
                if len(children) < cfg.population:
                    children.append(child)
        return children

    def run(self) -> GaOutcome:
        cfg = self.config
        population = [random_graph(cfg.n, self.rng) for _ in range(cfg.population)]
        scores = [self.score(g) for g in population]
        best_index = max(range(len(scores)), key=lambda k: (scores[k], -k))
        best_graph, best_fitness = population[best_index], scores[best_index]
        best_history = [max(scores)]
        mean_history = [float(np.mean(scores))]

        for generation in range(1, cfg.generations + 1):
            population = self.breed(population, scores)
            scores = [self.score(g) for g in population]
            top = max(range(len(scores)), key=lambda k: (scores[k], -k))
            if scores[top] > best_fitness:
                best_graph, best_fitness = population[top], scores[top]
            best_history.append(max(scores))
            mean_history.append(float(np.mean(scores)))
            self.logger.debug(f"Generation {generation}: best {best_history[-1]}, mean {mean_history[-1]:.2f}")

        return GaOutcome(
            best_graph=best_graph,
            best_fitness=best_fitness,
            best_history=best_history,
            mean_history=mean_history,
            seed=cfg.seed,
        )


def run_ga(config: GaConfig, fitness: Fitness) -> GaOutcome:
    return GeneticAlgorithm(config, fitness).run()


def random_search(n: int, fitness: Fitness, samples: int, rng: RngLike = None,
                  seed: Optional[int] = None) -> GaOutcome:
    """Best of ``samples`` uniform random graphs; history is the running best."""
    if samples < 1:
        raise ValueError("Random search needs at least one sample")
    rng = as_rng(rng if rng is not None else seed)
    best_graph, best_fitness = None, None
    history = []
    total = 0.0
    for _ in range(samples):
        g = random_graph(n, rng)
        value = int(fitness(g))
        total += value
        if best_fitness is None or value > best_fitness:
            best_graph, best_fitness = g, value
        history.append(best_fitness)
    return GaOutcome(best_graph=best_graph, best_fitness=best_fitness, best_history=history,
                     mean_history=[total / samples], seed=seed)
