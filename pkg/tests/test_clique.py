from functools import lru_cache

import networkx as nx
import numpy as np
import pytest

from src.bitgraph import enumerate_classes, random_graph
from src.clique import (
    DimacsParseError,
    ExplicitProblem,
    InstanceTooLargeError,
    PhasedLocalSearch,
    XorProblem,
    brute_force_max_clique,
    is_clique,
    max_clique_exact,
    parse_dimacs,
    parse_solver_spec,
    pls,
    read_dimacs,
    solve,
)
from src.cwsmap import clique_instance
from src.models import Graph, PlsParams
from src.pauli import amp_damp_error_set, symmetric_error_set


def random_problem(m: int, density: float, seed: int) -> ExplicitProblem:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((m, m)) < density, 1)
    return ExplicitProblem(np.arange(m), upper | upper.T)


@lru_cache(maxsize=None)
def lc_representatives(n: int):
    return tuple(c.representative for c in enumerate_classes(n, "lc_isomorphism"))


def complete_problem(m: int) -> ExplicitProblem:
    matrix = ~np.eye(m, dtype=bool)
    return ExplicitProblem(np.arange(m), matrix)


def cycle_problem(m: int) -> ExplicitProblem:
    return ExplicitProblem.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


class TestExact:
    def test_complete(self):
        assert max_clique_exact(complete_problem(9)).size == 9

    def test_five_cycle(self):
        assert max_clique_exact(cycle_problem(5)).size == 2

    def test_empty_instance(self, edge2):
        inst = clique_instance(edge2, symmetric_error_set(2, 2))
        assert max_clique_exact(inst).members == ()

    @pytest.mark.parametrize("seed", range(8))
    def test_agrees_with_brute_force(self, seed):
        problem = random_problem(18, 0.5, seed)
        found = max_clique_exact(problem)
        assert is_clique(problem, found.members)
        assert found.size == brute_force_max_clique(problem).size

    @pytest.mark.parametrize("seed", range(4))
    def test_agrees_with_networkx(self, seed):
        problem = random_problem(40, 0.6, seed)
        reference = nx.Graph(list(problem.edges()))
        reference.add_nodes_from(range(40))
        _, size = nx.max_weight_clique(reference, weight=None)
        assert max_clique_exact(problem).size == size

    def test_code_instances_agree_with_brute_force(self):
        rng = np.random.default_rng(9)
        checked = 0
        for _ in range(30):
            g = random_graph(5, rng)
            for error_set in (symmetric_error_set(5, 3), amp_damp_error_set(5, 1)):
                inst = clique_instance(g, error_set)
                if len(inst) > 20:
                    continue
                assert max_clique_exact(inst).size == brute_force_max_clique(inst).size
                checked += 1
        assert checked > 0

    def test_size_limit(self):
        with pytest.raises(InstanceTooLargeError):
            max_clique_exact(complete_problem(10), max_nodes=5)


class TestXorProblem:
    def test_degrees_match_materialized_matrix(self, c5):
        problem = XorProblem(clique_instance(c5, symmetric_error_set(5, 2)))
        np.testing.assert_array_equal(problem.degrees(), problem.adjacency_matrix().sum(axis=1))

    def test_rows_match_matrix(self):
        g = random_graph(6, 4)
        problem = XorProblem(clique_instance(g, symmetric_error_set(6, 2)))
        rows = np.stack([problem.adjacency_row(i) for i in range(len(problem))])
        np.testing.assert_array_equal(rows, problem.adjacency_matrix())

    def test_unknown_label(self, c5):
        problem = XorProblem(clique_instance(c5, symmetric_error_set(5, 2)))
        with pytest.raises(ValueError):
            problem.index_of(0)


class TestIsClique:
    def test_empty_set(self):
        assert is_clique(cycle_problem(5), [])

    def test_single_node(self):
        assert is_clique(cycle_problem(5), [3])

    def test_non_adjacent_pair(self):
        assert not is_clique(cycle_problem(5), [0, 2])

    def test_repeated_member(self):
        assert not is_clique(complete_problem(3), [1, 1])


class TestPhasedLocalSearch:
    def test_complete_instance_in_one_attempt(self):
        result = PhasedLocalSearch(complete_problem(12), PlsParams(attempts=5, seed=1)).run(target=12)
        assert result.clique.size == 12
        assert result.attempts_used == 1

    def test_edgeless_instance(self):
        problem = ExplicitProblem(np.arange(6), np.zeros((6, 6), dtype=bool))
        assert pls(problem, PlsParams(attempts=3, seed=0)).size == 1

    def test_empty_instance(self, edge2):
        assert pls(clique_instance(edge2, symmetric_error_set(2, 2))).size == 0

    @pytest.mark.parametrize("seed", range(5))
    def test_sound_and_never_above_exact(self, seed):
        problem = random_problem(30, 0.5, seed)
        found = pls(problem, PlsParams(attempts=10, max_selections=200, seed=seed))
        assert is_clique(problem, found.members)
        assert found.size <= max_clique_exact(problem).size

    def test_finds_the_five_cycle_code(self, c5):
        inst = clique_instance(c5, symmetric_error_set(5, 2))
        assert pls(inst, PlsParams(attempts=50, seed=3)).size == 5

    @pytest.mark.parametrize("index", range(26))
    def test_matches_exact_on_six_qubit_classes(self, index):
        inst = clique_instance(lc_representatives(6)[index], symmetric_error_set(6, 2))
        found = pls(inst, PlsParams(seed=index))
        assert is_clique(inst, found.members)
        assert found.size == max_clique_exact(inst).size

    def test_reproducible(self):
        problem = random_problem(40, 0.5, 1)
        params = PlsParams(attempts=4, max_selections=100, seed=42)
        assert pls(problem, params) == pls(problem, params)


class TestSolve:
    def test_parse_pls_spec(self):
        name, params = parse_solver_spec("pls:7:50", seed=3)
        assert name == "pls"
        assert (params.attempts, params.max_selections, params.seed) == (7, 50, 3)

    @pytest.mark.parametrize("spec", ["greedy", "exact:3", "pls:1:2:3"])
    def test_bad_specs(self, spec):
        with pytest.raises(ValueError):
            parse_solver_spec(spec)

    def test_auto_uses_exact_on_small_instances(self, c5):
        result = solve(clique_instance(c5, symmetric_error_set(5, 2)))
        assert result.solver == "exact"
        assert result.clique.size == 5
        report = result.to_report()
        assert report["size"] == 5 and len(report["members"]) == 5

    def test_pls_spec(self, c5):
        result = solve(clique_instance(c5, symmetric_error_set(5, 2)), "pls:20", seed=1)
        assert result.solver == "pls"
        assert 1 <= result.attempts_used <= 20


class TestDimacs:
    def test_parse(self):
        text = "c triangle plus a pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n"
        problem = parse_dimacs(text)
        assert list(problem.labels) == [1, 2, 3, 4]
        assert max_clique_exact(problem).members == (1, 2, 3)

    @pytest.mark.parametrize("text, line", [
        ("e 1 2\n", 1),
        ("p edge 3 1\np edge 3 1\n", 2),
        ("p edge 3 1\ne 1 4\n", 2),
        ("p edge 3 1\nx 1 2\n", 2),
        ("p node 3 1\n", 1),
        ("c nothing\n", 1),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(DimacsParseError) as info:
            parse_dimacs(text)
        assert info.value.line == line

    def test_graph_round_trip(self):
        g = Graph.cycle(6)
        text = "p edge 6 6\n" + "".join(f"e {i + 1} {j + 1}\n" for i, j in g.edges())
        assert sorted(parse_dimacs(text).edges()) == sorted(g.edges())

    def test_read_file(self, tmp_path):
        path = tmp_path / "k4.clq"
        path.write_text("p col 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
        assert max_clique_exact(read_dimacs(path)).size == 4
