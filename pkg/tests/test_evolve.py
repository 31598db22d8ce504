import pickle

import numpy as np
import pytest

from src.bitgraph import random_graph, spectral_bisection
from src.evolve import (
    CliqueOrderFitness,
    GeneticAlgorithm,
    bits_to_str,
    crossover_bits,
    crossover_graphs,
    crossover_spectral,
    decode_bits,
    encode_bits,
    mutate,
    random_search,
    run_ga,
)
from src.evolve.crossover import _join_fragments
from src.models import CROSSOVER_KINDS, GaConfig, Graph
from src.pauli import symmetric_error_set

TWO_TRIANGLES = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def edge_count(g: Graph) -> int:
    return g.num_edges


class TestEncoding:
    def test_empty_graph(self):
        assert bits_to_str(encode_bits(Graph.empty(4))) == "000000"

    def test_triangle(self):
        assert bits_to_str(encode_bits(Graph.complete(3))) == "111"

    def test_pair_order(self):
        assert bits_to_str(encode_bits(Graph.from_edges(4, [(0, 2), (2, 3)]))) == "010001"

    def test_round_trip(self):
        g = random_graph(8, 0)
        assert decode_bits(encode_bits(g), 8) == g

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            decode_bits(np.zeros(5, dtype=np.uint8), 4)


class TestBitCrossover:
    a = np.array([0, 0, 0, 0, 0, 0], dtype=np.uint8)
    b = np.array([1, 1, 1, 1, 1, 1], dtype=np.uint8)

    def test_identical_parents(self):
        for kind in ("single_point", "two_point", "uniform"):
            c1, c2 = crossover_bits(kind, self.a, self.a, rng=1)
            assert not c1.any() and not c2.any()

    def test_single_point_at_zero_swaps_everything(self):
        c1, c2 = crossover_bits("single_point", self.a, self.b, points=[0])
        assert c1.tolist() == self.b.tolist()
        assert c2.tolist() == self.a.tolist()

    def test_single_point_in_the_middle(self):
        c1, _ = crossover_bits("single_point", self.a, self.b, points=[4])
        assert c1.tolist() == [0, 0, 0, 0, 1, 1]

    def test_two_point(self):
        c1, c2 = crossover_bits("two_point", self.a, self.b, points=[1, 3])
        assert c1.tolist() == [0, 1, 1, 0, 0, 0]
        assert c2.tolist() == [1, 0, 0, 1, 1, 1]

    def test_uniform_with_certain_exchange(self):
        c1, c2 = crossover_bits("uniform", self.a, self.b, rng=0, exchange_prob=1.0)
        assert c1.tolist() == self.b.tolist()
        assert c2.tolist() == self.a.tolist()

    def test_children_conserve_loci(self):
        rng = np.random.default_rng(3)
        p1 = rng.integers(0, 2, 21).astype(np.uint8)
        p2 = rng.integers(0, 2, 21).astype(np.uint8)
        c1, c2 = crossover_bits("uniform", p1, p2, rng)
        np.testing.assert_array_equal(c1.astype(int) + c2, p1.astype(int) + p2)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            crossover_bits("three_point", self.a, self.b)


class TestSpectralCrossover:
    def test_children_are_valid_graphs(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            p1, p2 = random_graph(9, rng), random_graph(9, rng)
            c1, c2 = crossover_spectral(p1, p2, rng)
            assert c1.n == c2.n == 9

    def test_zero_cut_parents_are_reproduced(self):
        c1, c2 = crossover_spectral(TWO_TRIANGLES, TWO_TRIANGLES, rng=0)
        assert c1 == TWO_TRIANGLES
        assert c2 == TWO_TRIANGLES

    def test_kept_fragment_stays_in_place(self):
        rng = np.random.default_rng(12)
        p1, p2 = random_graph(10, rng), random_graph(10, rng)
        part = spectral_bisection(p1).part1
        c1, _ = crossover_spectral(p1, p2, rng)
        for i in part:
            for j in part:
                if i < j:
                    assert c1.has_edge(i, j) == p1.has_edge(i, j)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            crossover_spectral(Graph.empty(4), Graph.empty(5))

    def test_stranded_deficit_still_gets_coin_flips(self):
        # node 0 already touches node 1, the only right node with deficit left
        joined = 0
        for seed in range(50):
            rows = [0b010, 0b001, 0]
            _join_fragments(rows, [0], [1, 2], [3], [1, 0], np.random.default_rng(seed))
            assert rows[0] & 0b010
            joined += bool(rows[0] & 0b100)
        assert joined > 0

    @pytest.mark.parametrize("kind", CROSSOVER_KINDS)
    def test_every_kind_keeps_the_order(self, kind):
        c1, c2 = crossover_graphs(kind, random_graph(7, 1), random_graph(7, 2), rng=5)
        assert c1.n == c2.n == 7


class TestMutation:
    def test_empty_graph_gains_one_edge(self):
        assert mutate(Graph.empty(5), rng=0).num_edges == 1

    def test_complete_graph_loses_one_edge(self):
        assert mutate(Graph.complete(5), rng=0).num_edges == 9

    def test_same_pair_twice_restores(self):
        g = random_graph(6, 2)
        assert mutate(mutate(g, rng=17), rng=17) == g

    def test_per_bit_kind(self):
        g = random_graph(6, 2)
        assert mutate(g, rng=3, kind="per_bit").n == 6

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            mutate(Graph.empty(3), rng=0, kind="swap")


class TestGeneticAlgorithm:
    def config(self, **overrides):
        params = dict(n=5, population=8, generations=6, tournament=3, elitism=2, seed=11)
        params.update(overrides)
        return GaConfig(**params)

    def test_zero_generations_returns_best_initial(self):
        outcome = run_ga(self.config(generations=0), edge_count)
        assert len(outcome.best_history) == 1
        assert outcome.best_fitness == outcome.best_history[0]

    def test_constant_fitness(self):
        outcome = run_ga(self.config(), lambda g: 7)
        assert outcome.best_fitness == 7
        assert outcome.mean_history == [7.0] * 7

    def test_elitism_keeps_best_fitness_monotone(self):
        for kind in CROSSOVER_KINDS:
            outcome = run_ga(self.config(crossover=kind), edge_count)
            history = outcome.best_history
            assert all(a <= b for a, b in zip(history, history[1:]))
            assert outcome.best_fitness == max(history)

    def test_full_tournament_picks_the_fittest(self):
        ga = GeneticAlgorithm(self.config(population=5, tournament=5), edge_count)
        population = [random_graph(5, s) for s in range(5)]
        scores = [edge_count(g) for g in population]
        best = max(range(5), key=lambda k: (scores[k], -k))
        assert ga.tournament(population, scores) == population[best]

    def test_seeded_runs_repeat(self):
        fitness = CliqueOrderFitness(symmetric_error_set(5, 2))
        a = run_ga(self.config(), fitness)
        b = run_ga(self.config(), fitness)
        assert a.best_history == b.best_history
        assert a.best_graph == b.best_graph

    def test_fitness_is_picklable(self):
        fitness = CliqueOrderFitness(symmetric_error_set(5, 2))
        clone = pickle.loads(pickle.dumps(fitness))
        g = Graph.cycle(5)
        assert clone(g) == fitness(g)

    @pytest.mark.parametrize("overrides", [
        dict(tournament=9),
        dict(elitism=8),
        dict(crossover_prob=1.5),
        dict(crossover="ring"),
        dict(mutation="swap"),
    ])
    def test_config_validation(self, overrides):
        with pytest.raises(ValueError):
            self.config(**overrides)

    def test_single_node_graphs_rejected(self):
        with pytest.raises(ValueError):
            GaConfig(n=1)

    def test_production_preset(self):
        cfg = GaConfig.production(13)
        assert (cfg.population, cfg.generations, cfg.tournament) == (10, 50, 5)


class TestRandomSearch:
    def test_running_best(self):
        outcome = random_search(5, edge_count, samples=20, seed=4)
        assert len(outcome.best_history) == 20
        assert outcome.best_history[-1] == outcome.best_fitness
        assert all(a <= b for a, b in zip(outcome.best_history, outcome.best_history[1:]))

    def test_needs_samples(self):
        with pytest.raises(ValueError):
            random_search(5, edge_count, samples=0)
