"""Data models for clique search, the genetic algorithm and search reports."""

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple

from ..config import (
    GA_CROSSOVER_PROB,
    GA_ELITISM,
    GA_GENERATIONS,
    GA_MUTATION_PROB,
    GA_POPULATION,
    GA_PRODUCTION_GENERATIONS,
    GA_PRODUCTION_POPULATION,
    GA_PRODUCTION_TOURNAMENT,
    GA_TOURNAMENT,
    GA_UNIFORM_EXCHANGE_PROB,
    PLS_ATTEMPTS,
    PLS_MAX_SELECTIONS,
)
from .graph import Graph

CROSSOVER_KINDS = ("single_point", "two_point", "uniform", "random", "spectral")
MUTATION_KINDS = ("toggle", "per_bit")


@dataclass(frozen=True)
class Clique:
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class PlsParams:
    attempts: int = PLS_ATTEMPTS
    max_selections: int = PLS_MAX_SELECTIONS
    seed: Optional[int] = None

    def __post_init__(self):
        if self.attempts < 1 or self.max_selections < 1:
            raise ValueError("PLS needs at least one attempt and one selection")


@dataclass(frozen=True)
class GaConfig:
    n: int
    population: int = GA_POPULATION
    generations: int = GA_GENERATIONS
    crossover_prob: float = GA_CROSSOVER_PROB
    mutation_prob: float = GA_MUTATION_PROB
    tournament: int = GA_TOURNAMENT
    elitism: int = GA_ELITISM
    crossover: str = "spectral"
    exchange_prob: float = GA_UNIFORM_EXCHANGE_PROB
    mutation: str = "toggle"
    seed: Optional[int] = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"The GA needs graphs on at least two nodes, got n={self.n}")
        if not 0.0 <= self.crossover_prob <= 1.0 or not 0.0 <= self.mutation_prob <= 1.0:
            raise ValueError("Probabilities must lie in [0, 1]")
        if not 1 <= self.tournament <= self.population:
            raise ValueError("Tournament size must be in 1..population")
        if not 0 <= self.elitism < self.population:
            raise ValueError("Elitism count must be below the population size")
        if self.crossover not in CROSSOVER_KINDS:
            raise ValueError(f"Unknown crossover kind {self.crossover!r}")
        if self.mutation not in MUTATION_KINDS:
            raise ValueError(f"Unknown mutation kind {self.mutation!r}")

    @staticmethod
    def production(n: int, **overrides) -> "GaConfig":
        """Preset used for large campaigns: short runs, small populations."""
        params = dict(
            population=GA_PRODUCTION_POPULATION,
            generations=GA_PRODUCTION_GENERATIONS,
            tournament=GA_PRODUCTION_TOURNAMENT,
        )
        params.update(overrides)
        return GaConfig(n=n, **params)


@dataclass
class GaOutcome:
    best_graph: Graph
    best_fitness: int
    best_history: List[int] = field(default_factory=list)
    mean_history: List[float] = field(default_factory=list)
    seed: Optional[int] = None


@dataclass
class GraphResult:
    """One solved graph in a search."""

    graph6: str
    order: int  # clique graph order |N_E|
    clique_size: int
    K: int  # 0 when the graph yields no code
    pure: bool
    codewords: List[int] = field(default_factory=list)
    class_size: int = 1  # labeled graphs represented
    iso_classes: int = 1  # isomorphism classes represented
    seed: Optional[int] = None
    cached: bool = False

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass
class SearchReport:
    mode: str
    n: int
    error_set: str
    error_set_hash: str
    solver: str
    rows: List[GraphResult] = field(default_factory=list)
    seed: Optional[int] = None
    wall_seconds: float = 0.0
    failures: int = 0  # tasks that raised
    skipped: int = 0  # candidates below the clique-graph-order cutoff
    verification_failures: int = 0

    @property
    def best_K(self) -> int:
        return max((r.K for r in self.rows), default=0)

    def best_rows(self) -> List[GraphResult]:
        """Rows at the best K; empty when no candidate yields a code."""
        best = self.best_K
        if best == 0:
            return []
        return [r for r in self.rows if r.K == best]

    def size_histogram(self) -> Dict[int, Dict[str, int]]:
        """K -> counts over classes searched, isomorphism classes, labeled graphs."""
        hist: Dict[int, Dict[str, int]] = {}
        for r in self.rows:
            entry = hist.setdefault(r.K, {"classes": 0, "iso": 0, "labeled": 0})
            entry["classes"] += 1
            entry["iso"] += r.iso_classes
            entry["labeled"] += r.class_size
        return dict(sorted(hist.items()))

    def cluster_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for r in self.rows:
            hist[r.order] = hist.get(r.order, 0) + 1
        return dict(sorted(hist.items()))

    def optimal_fractions(self) -> Tuple[float, float, float]:
        """Fraction of searched classes, iso classes and labeled graphs at best K."""
        if not self.rows:
            return (0.0, 0.0, 0.0)
        best = self.best_rows()
        total_iso = sum(r.iso_classes for r in self.rows)
        total_labeled = sum(r.class_size for r in self.rows)
        return (
            len(best) / len(self.rows),
            sum(r.iso_classes for r in best) / total_iso,
            sum(r.class_size for r in best) / total_labeled,
        )

    def summary(self) -> Dict:
        fractions = self.optimal_fractions()
        return {
            "mode": self.mode,
            "n": self.n,
            "error_set": self.error_set,
            "error_set_hash": self.error_set_hash,
            "solver": self.solver,
            "seed": self.seed,
            "graphs": len(self.rows),
            "best_K": self.best_K,
            "best_count": len(self.best_rows()),
            "optimal_fractions": {"classes": fractions[0], "iso": fractions[1], "labeled": fractions[2]},
            "size_histogram": {str(k): v for k, v in self.size_histogram().items()},
            "cluster_histogram": {str(k): v for k, v in self.cluster_histogram().items()},
            "failures": self.failures,
            "skipped": self.skipped,
            "verification_failures": self.verification_failures,
            "wall_seconds": round(self.wall_seconds, 3),
        }


@dataclass
class SolveResult:
    """Outcome of one clique solver run."""

    clique: Clique
    solver: str
    attempts_used: int = 1
    wall_ms: float = 0.0

    def to_report(self) -> Dict:
        return {
            "size": self.clique.size,
            "members": [int(x) for x in self.clique.members],
            "attempts_used": self.attempts_used,
            "wall_ms": round(self.wall_ms, 3),
        }
