"""Search campaigns: candidate graphs in, solved and verified codes out."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..bitgraph import enumerate_classes, from_graph6, random_graph, to_graph6
from ..clique import parse_solver_spec, solve
from ..config import ORACLE_MAX_QUBITS
from ..cwsmap import build_code, clique_graph_order, clique_instance, verify_code
from ..evolve import CliqueOrderFitness, run_ga
from ..models import ErrorSet, GaConfig, Graph, GraphResult, SearchReport
from ..qoracle import detection_check
from ..rng import as_rng, derive_seed
from ..state import ResultCache

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "random", "ga")
RELATION_NAMES = {"lc": "lc_isomorphism", "iso": "isomorphism"}


@dataclass(frozen=True)
class Candidate:
    graph: Graph
    class_size: int = 1
    iso_classes: int = 1


@dataclass(frozen=True)
class SolveTask:
    graph6: str
    class_size: int
    iso_classes: int
    error_set: ErrorSet
    solver: str
    seed: int


class TaskFailed:
    """Picklable marker for a task that raised in a worker."""

    def __init__(self, task: object, message: str):
        self.task = task
        self.message = message


class Guarded:
    """Wrap a task function so one failure does not abort the whole pool."""

    def __init__(self, fn: Callable):
        self.fn = fn

    def __call__(self, task):
        try:
            return self.fn(task)
        except Exception as e:  # reported and counted by the caller
            return TaskFailed(task, f"{type(e).__name__}: {e}")


def fan_out(fn: Callable, tasks: Sequence, jobs: int = 1, desc: str = "", quiet: bool = False) -> Iterator:
    """Ordered map over tasks, in-process or on a process pool."""
    guarded = Guarded(fn)
    bar = tqdm(total=len(tasks), desc=desc, disable=quiet or not tasks)
    try:
        if jobs <= 1:
            for task in tasks:
                yield guarded(task)
                bar.update()
        else:
            chunk = max(1, len(tasks) // (jobs * 8))
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for outcome in pool.map(guarded, tasks, chunksize=chunk):
                    yield outcome
                    bar.update()
    finally:
        bar.close()


def solve_graph(g: Graph, error_set: ErrorSet, solver: str = "auto", seed: Optional[int] = None) -> GraphResult:
    """Clique-solve one graph and turn the clique into a verified code."""
    inst = clique_instance(g, error_set)
    outcome = solve(inst, solver, seed=seed)
    code = build_code(g, error_set, outcome.clique)
    # a one-dimensional code is a stabilizer state and must be pure
    trivial = code.K == 1 and not code.pure
    return GraphResult(
        graph6=to_graph6(g),
        order=len(inst),
        clique_size=outcome.clique.size,
        K=0 if trivial else code.K,
        pure=code.pure,
        codewords=[] if trivial else list(code.codewords),
        seed=seed,
    )


def _solve_task(task: SolveTask) -> GraphResult:
    result = solve_graph(from_graph6(task.graph6), task.error_set, task.solver, task.seed)
    result.class_size = task.class_size
    result.iso_classes = task.iso_classes
    return result


def _order_task(args: Tuple[str, ErrorSet]) -> int:
    return clique_graph_order(from_graph6(args[0]), args[1]).order


def _ga_task(args: Tuple[GaConfig, ErrorSet]):
    config, error_set = args
    return run_ga(config, CliqueOrderFitness(error_set))


class SearchCampaign:
    """One search over candidate graphs for a fixed error set."""

    def __init__(
        self,
        mode: str,
        error_set: ErrorSet,
        solver: str = "auto",
        seed: Optional[int] = None,
        jobs: int = 1,
        relation: str = "lc",
        samples: int = 100,
        ga_config: Optional[GaConfig] = None,
        ga_instances: int = 10,
        min_order: Optional[int] = None,
        escalate_attempts: Optional[int] = None,
        cache: Optional[ResultCache] = None,
        oracle: bool = True,
        quiet: bool = False,
    ):
        if mode not in MODES:
            raise ValueError(f"Unknown search mode {mode!r}, expected one of {MODES}")
        if relation not in RELATION_NAMES:
            raise ValueError(f"Unknown relation {relation!r}, expected one of {sorted(RELATION_NAMES)}")
        parse_solver_spec(solver)
        self.mode = mode
        self.error_set = error_set
        self.n = error_set.n
        self.solver = solver
        self.seed = seed
        self.jobs = jobs
        self.relation = relation
        self.samples = samples
        self.ga_config = ga_config
        self.ga_instances = ga_instances
        self.min_order = min_order
        self.escalate_attempts = escalate_attempts
        self.cache = cache
        self.oracle = oracle
        self.quiet = quiet
        self.logger = logging.getLogger(self.__class__.__name__)

    # Candidate generation

    def candidates(self) -> List[Candidate]:
        if self.mode == "exhaustive":
            classes = enumerate_classes(self.n, RELATION_NAMES[self.relation])
            return [Candidate(c.representative, c.class_size, c.iso_classes) for c in classes]
        if self.mode == "random":
            rng = as_rng(self.seed)
            return [Candidate(random_graph(self.n, rng)) for _ in range(self.samples)]
        return self._ga_candidates()

    def _ga_candidates(self) -> List[Candidate]:
        base = self.ga_config or GaConfig.production(self.n)
        configs = [
            (replace(base, n=self.n, seed=derive_seed(self.seed, index)), self.error_set)
            for index in range(self.ga_instances)
        ]
        found = []
        for outcome in fan_out(_ga_task, configs, self.jobs, "GA instances", self.quiet):
            if isinstance(outcome, TaskFailed):
                self.logger.error(f"GA instance failed: {outcome.message}")
                continue
            found.append(Candidate(outcome.best_graph))
        return found

    def _prefilter(self, candidates: List[Candidate]) -> Tuple[List[Candidate], int]:
        if self.min_order is None:
            return candidates, 0
        args = [(to_graph6(c.graph), self.error_set) for c in candidates]
        kept = []
        for candidate, order in zip(candidates, fan_out(_order_task, args, self.jobs, "Clique graph order", self.quiet)):
            if isinstance(order, TaskFailed) or order >= self.min_order:
                kept.append(candidate)
        return kept, len(candidates) - len(kept)

    # Solving

    def _solve_all(self, candidates: List[Candidate], solver: str, report: SearchReport,
                   seed_offset: int = 0) -> List[GraphResult]:
        results: List[Optional[GraphResult]] = [None] * len(candidates)
        tasks, slots = [], []
        for index, c in enumerate(candidates):
            graph6 = to_graph6(c.graph)
            cached = self.cache.get(graph6, self.error_set.content_hash, solver) if self.cache else None
            if cached is not None:
                cached.class_size, cached.iso_classes = c.class_size, c.iso_classes
                results[index] = cached
                continue
            seed = derive_seed(self.seed, seed_offset + index)
            tasks.append(SolveTask(graph6, c.class_size, c.iso_classes, self.error_set, solver, seed))
            slots.append(index)
        if len(tasks) < len(candidates):
            self.logger.info(f"{len(candidates) - len(tasks)} results served from the cache")

        for index, outcome in zip(slots, fan_out(_solve_task, tasks, self.jobs, "Solving", self.quiet)):
            if isinstance(outcome, TaskFailed):
                report.failures += 1
                self.logger.error(f"Failed to solve {outcome.task.graph6}: {outcome.message}")
                continue
            results[index] = outcome
            if self.cache is not None:
                self.cache.put(outcome, self.error_set.content_hash, solver)
        return [r for r in results if r is not None]

    def _escalate(self, report: SearchReport):
        """Re-solve the best and top-order rows with more PLS attempts."""
        if not self.escalate_attempts or not report.rows:
            return
        top_order = max(r.order for r in report.rows)
        best = report.best_K
        picked = [k for k, r in enumerate(report.rows) if r.K == best or r.order == top_order]
        solver = f"pls:{self.escalate_attempts}"
        self.logger.info(f"Escalating {len(picked)} candidates to {self.escalate_attempts} PLS attempts")
        candidates = [
            Candidate(from_graph6(report.rows[k].graph6), report.rows[k].class_size, report.rows[k].iso_classes)
            for k in picked
        ]
        improved = 0
        for k, result in zip(picked, self._solve_all(candidates, solver, report, seed_offset=len(report.rows))):
            if result.K > report.rows[k].K:
                report.rows[k] = result
                improved += 1
        self.logger.info(f"Escalation improved {improved} rows")

    def verify_best(self, report: SearchReport) -> int:
        """Re-verify every best row classically, and with the oracle when small enough."""
        failures = 0
        use_oracle = self.oracle and self.n <= ORACLE_MAX_QUBITS
        for row in report.best_rows():
            g = from_graph6(row.graph6)
            verdict = verify_code(g, self.error_set, row.codewords)
            ok = verdict.ok
            if ok and use_oracle:
                ok = detection_check(g, row.codewords, self.error_set).ok
            if not ok:
                failures += 1
                self.logger.error(f"Best code on {row.graph6} failed re-verification")
        return failures

    def run(self) -> SearchReport:
        started = time.perf_counter()
        report = SearchReport(
            mode=self.mode,
            n=self.n,
            error_set=self.error_set.descriptor,
            error_set_hash=self.error_set.content_hash,
            solver=self.solver,
            seed=self.seed,
        )
        candidates = self.candidates()
        self.logger.info(f"{len(candidates)} candidate graphs ({self.mode})")
        candidates, report.skipped = self._prefilter(candidates)
        if report.skipped:
            self.logger.info(f"Skipped {report.skipped} candidates below clique graph order {self.min_order}")

        report.rows = self._solve_all(candidates, self.solver, report)
        self._escalate(report)
        report.verification_failures = self.verify_best(report)
        if self.cache is not None:
            self.cache.save()
        report.wall_seconds = time.perf_counter() - started
        return report


def order_histogram(graphs: Iterable[Graph], error_set: ErrorSet, jobs: int = 1, quiet: bool = False) -> dict:
    """Count candidate graphs by clique graph order."""
    args = [(to_graph6(g), error_set) for g in graphs]
    histogram = {}
    for order in fan_out(_order_task, args, jobs, "Clique graph order", quiet):
        if isinstance(order, TaskFailed):
            logger.error(f"Order computation failed: {order.message}")
            continue
        histogram[order] = histogram.get(order, 0) + 1
    return dict(sorted(histogram.items()))
