import pytest

from src.bitgraph import from_graph6, random_graph
from src.cwsmap import clique_graph_order
from src.models import GaConfig, Graph
from src.pauli import amp_damp_error_set, symmetric_error_set
from src.search import (
    SearchCampaign,
    compare_crossovers,
    elitism_monotone,
    fan_out,
    one_sided_pvalues,
    order_histogram,
    solve_graph,
)
from src.search.campaign import TaskFailed
from src.state import ResultCache


def exhaustive(n, d, **kwargs):
    kwargs.setdefault("solver", "exact")
    return SearchCampaign("exhaustive", symmetric_error_set(n, d), quiet=True, **kwargs).run()


def fail_on_odd(x):
    if x % 2:
        raise RuntimeError(f"odd input {x}")
    return x * 10


class TestFanOut:
    def test_serial_keeps_order_and_isolates_failures(self):
        out = list(fan_out(fail_on_odd, [2, 3, 4], quiet=True))
        assert out[0] == 20 and out[2] == 40
        assert isinstance(out[1], TaskFailed)
        assert "odd input 3" in out[1].message

    def test_pool_keeps_order(self):
        assert list(fan_out(abs, [-3, -1, 2, -7], jobs=2, quiet=True)) == [3, 1, 2, 7]


class TestSolveGraph:
    def test_five_cycle(self, c5):
        result = solve_graph(c5, symmetric_error_set(5, 2))
        assert result.K == 6
        assert result.clique_size == result.K - 1
        assert result.pure
        assert result.graph6 == "Dhc"

    def test_edge_graph_has_only_the_trivial_code(self, edge2):
        assert solve_graph(edge2, symmetric_error_set(2, 2)).K == 1

    def test_impure_graph_without_clique_gives_no_code(self):
        result = solve_graph(Graph.empty(2), symmetric_error_set(2, 2))
        assert not result.pure
        assert result.K == 0
        assert result.codewords == []


class TestExhaustive:
    def test_two_qubits(self):
        assert exhaustive(2, 2).best_K == 1

    def test_four_qubits(self):
        report = exhaustive(4, 2)
        assert report.best_K == 4
        classes, iso, labeled = report.optimal_fractions()
        assert classes == pytest.approx(0.500, abs=1e-3)
        assert iso == pytest.approx(0.636, abs=1e-3)
        assert labeled == pytest.approx(0.641, abs=1e-3)

    def test_five_qubits_single_optimal_class(self):
        report = exhaustive(5, 2)
        assert report.best_K == 6
        assert len(report.best_rows()) == 1
        assert report.verification_failures == 0
        assert report.failures == 0

    def test_five_qubits_distance_three(self):
        report = exhaustive(5, 3)
        assert report.best_K == 2
        assert len(report.best_rows()) == 1

    def test_six_qubits(self):
        report = exhaustive(6, 2)
        assert report.best_K == 16
        classes, iso, labeled = report.optimal_fractions()
        assert classes == pytest.approx(0.539, abs=1e-3)
        assert iso == pytest.approx(0.763, abs=1e-3)
        assert labeled == pytest.approx(0.833, abs=1e-3)

    def test_six_qubits_distance_three(self):
        report = exhaustive(6, 3)
        assert report.best_K == 2
        assert len(report.best_rows()) == 2

    def test_three_qubits_single_pure_class(self):
        report = exhaustive(3, 2)
        assert report.best_K == 1
        assert len(report.best_rows()) == 1
        assert report.best_rows()[0].pure

    def test_six_qubits_distance_four(self):
        report = exhaustive(6, 4)
        assert report.best_K == 1
        assert len(report.best_rows()) == 1

    @pytest.mark.slow
    def test_seven_qubits_distance_four_has_no_code(self):
        report = exhaustive(7, 4)
        assert report.best_K == 0
        assert report.best_rows() == []
        assert report.verification_failures == 0

    @pytest.mark.slow
    def test_seven_qubits(self):
        report = exhaustive(7, 2)
        assert report.best_K == 24
        assert len(report.best_rows()) == 7

    @pytest.mark.slow
    def test_seven_qubits_distance_three(self):
        report = exhaustive(7, 3)
        assert report.best_K == 2
        assert len(report.best_rows()) == 18

    def test_size_histogram_totals(self):
        report = exhaustive(4, 2)
        hist = report.size_histogram()
        assert sum(v["classes"] for v in hist.values()) == 6
        assert sum(v["iso"] for v in hist.values()) == 11
        assert sum(v["labeled"] for v in hist.values()) == 64

    def test_amplitude_damping_codes_reverify(self):
        campaign = SearchCampaign("exhaustive", amp_damp_error_set(4, 1), relation="iso", quiet=True)
        report = campaign.run()
        assert len(report.rows) == 11
        assert report.verification_failures == 0


class TestCampaignOptions:
    def test_random_mode_is_reproducible(self):
        def run():
            return SearchCampaign("random", symmetric_error_set(5, 2), samples=6, seed=3, quiet=True).run()

        a, b = run(), run()
        assert len(a.rows) == 6
        assert [r.graph6 for r in a.rows] == [r.graph6 for r in b.rows]
        assert [r.K for r in a.rows] == [r.K for r in b.rows]

    def test_ga_mode(self):
        config = GaConfig(n=5, population=6, generations=3, tournament=2, elitism=1)
        report = SearchCampaign("ga", symmetric_error_set(5, 2), ga_config=config, ga_instances=2,
                                seed=1, quiet=True).run()
        assert len(report.rows) == 2
        assert report.verification_failures == 0

    def test_min_order_skips_candidates(self):
        report = exhaustive(4, 2, min_order=1000)
        assert report.rows == []
        assert report.skipped == 6

    def test_escalation_keeps_every_row(self):
        report = exhaustive(5, 2, solver="pls:1:3", seed=2, escalate_attempts=30)
        assert len(report.rows) == 11
        assert 2 <= report.best_K <= 6
        assert report.verification_failures == 0

    def test_cache_serves_repeat_runs(self, tmp_path):
        cache_file = tmp_path / "cache.jsonl"
        first = exhaustive(4, 2, cache=ResultCache(cache_file))
        assert not any(r.cached for r in first.rows)
        second = exhaustive(4, 2, cache=ResultCache(cache_file))
        assert all(r.cached for r in second.rows)
        assert [r.K for r in first.rows] == [r.K for r in second.rows]
        assert sum(r.class_size for r in second.rows) == 64
        assert ResultCache(cache_file).last_run() is not None

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            SearchCampaign("annealing", symmetric_error_set(4, 2))

    def test_unknown_solver(self):
        with pytest.raises(ValueError):
            SearchCampaign("exhaustive", symmetric_error_set(4, 2), solver="greedy")


class TestOrderHistogram:
    def test_total_matches_sample(self):
        graphs = [random_graph(5, s) for s in range(10)]
        hist = order_histogram(graphs, symmetric_error_set(5, 2), quiet=True)
        assert sum(hist.values()) == 10

    def test_empty_sample(self):
        assert order_histogram([], symmetric_error_set(5, 2), quiet=True) == {}

    def test_order_of_the_five_cycle(self, c5):
        assert order_histogram([c5], symmetric_error_set(5, 2), quiet=True) == {16: 1}


class TestCompareCrossovers:
    def test_small_comparison(self):
        base = GaConfig(n=5, population=6, generations=4, tournament=2, elitism=1)
        outcomes = compare_crossovers(base, symmetric_error_set(5, 2), ["spectral", "random"], instances=3,
                                      seed=7, quiet=True)
        assert set(outcomes) == {"spectral", "random"}
        assert all(len(runs) == 3 for runs in outcomes.values())
        assert all(elitism_monotone(o) for runs in outcomes.values() for o in runs)
        # paired seeds across kinds
        assert [o.seed for o in outcomes["spectral"]] == [o.seed for o in outcomes["random"]]
        pvalues = one_sided_pvalues(outcomes)
        assert set(pvalues) == {"random"}
        assert 0.0 <= pvalues["random"] <= 1.0

    def test_reference_kind_required(self):
        with pytest.raises(ValueError):
            one_sided_pvalues({"random": []})

    @pytest.mark.slow
    def test_spectral_beats_random_crossover(self):
        base = GaConfig(n=13, population=20, generations=100)
        outcomes = compare_crossovers(base, symmetric_error_set(13, 4), ["spectral", "random"], instances=20,
                                      seed=0, jobs=4, quiet=True)
        spectral = sum(o.best_fitness for o in outcomes["spectral"]) / 20
        random_kind = sum(o.best_fitness for o in outcomes["random"]) / 20
        assert spectral > random_kind
        assert one_sided_pvalues(outcomes)["random"] < 0.05


def damping_search(n, perm):
    return SearchCampaign("exhaustive", amp_damp_error_set(n, 1, perm), relation="iso", solver="exact",
                          quiet=True).run()


class TestAmplitudeDampingCounts:
    @pytest.mark.parametrize("perm, count", [("id", 5), ("xz", 9), ("yz", 3)])
    def test_five_qubits(self, perm, count):
        report = damping_search(5, perm)
        assert report.best_K == 2
        assert len(report.best_rows()) == count
        assert report.verification_failures == 0

    @pytest.mark.slow
    @pytest.mark.parametrize("perm, count", [("id", 11), ("xz", 16), ("yz", 0)])
    def test_six_qubits(self, perm, count):
        report = damping_search(6, perm)
        assert report.best_K <= 4
        assert sum(r.K == 4 for r in report.rows) == count


class TestClustering:
    def test_fast_order_matches_instance_size(self):
        error_set = symmetric_error_set(6, 2)
        for row in exhaustive(6, 2).rows:
            assert clique_graph_order(from_graph6(row.graph6), error_set).order == row.order

    def test_top_order_rows_are_optimal_six_qubits(self):
        report = exhaustive(6, 2)
        top = max(r.order for r in report.rows)
        assert all(r.K == report.best_K for r in report.rows if r.order == top)
        assert min(r.order for r in report.best_rows()) > min(r.order for r in report.rows)

    @pytest.mark.slow
    def test_top_order_rows_are_optimal_eight_qubits_sampled(self):
        report = SearchCampaign("random", symmetric_error_set(8, 3), solver="exact", samples=300, seed=0,
                                quiet=True).run()
        error_set = symmetric_error_set(8, 3)
        for row in report.rows[:50]:
            assert clique_graph_order(from_graph6(row.graph6), error_set).order == row.order
        top = max(r.order for r in report.rows)
        assert max(r.K for r in report.rows if r.order == top) == report.best_K
