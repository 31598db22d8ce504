import json

from src.models import GraphResult
from src.state import ResultCache


def make_result(graph6="Dhc", K=6):
    return GraphResult(graph6=graph6, order=16, clique_size=K - 1, K=K, pure=True, codewords=[0, 11, 13, 21, 22, 26])


class TestResultCache:
    def test_missing_file_is_empty(self, tmp_path):
        cache = ResultCache(tmp_path / "none.jsonl")
        assert len(cache) == 0
        assert cache.last_run() is None

    def test_put_save_reload(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        cache = ResultCache(path)
        cache.put(make_result(), "abc", "exact")
        cache.save()
        reloaded = ResultCache(path)
        hit = reloaded.get("Dhc", "abc", "exact")
        assert hit is not None and hit.cached
        assert hit.K == 6 and hit.codewords == [0, 11, 13, 21, 22, 26]
        assert reloaded.last_run() is not None

    def test_key_includes_solver_and_error_set(self, tmp_path):
        cache = ResultCache(tmp_path / "cache.jsonl")
        cache.put(make_result(), "abc", "exact")
        assert cache.get("Dhc", "abc", "pls:50") is None
        assert cache.get("Dhc", "def", "exact") is None

    def test_save_appends_only_new_records(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        cache = ResultCache(path)
        cache.put(make_result(), "abc", "exact")
        cache.save()
        cache.save()
        cache.put(make_result("C~", K=2), "abc", "exact")
        cache.save()
        assert len(path.read_text().splitlines()) == 2

    def test_corrupt_lines_skipped(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        good = {"graph6": "Dhc", "error_set_hash": "abc", "solver": "exact", "order": 16, "clique_size": 5,
                "K": 6, "pure": True, "codewords": [0, 11], "solved_at": "2026-01-02T03:04:05+00:00"}
        path.write_text("{not json\n" + json.dumps({"K": 1}) + "\n\n" + json.dumps(good) + "\n")
        cache = ResultCache(path)
        assert len(cache) == 1
        assert cache.last_run().year == 2026

    def test_newest_timestamp_wins(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        base = {"error_set_hash": "abc", "solver": "exact", "order": 1, "clique_size": 0, "K": 1, "pure": True,
                "codewords": [0]}
        lines = [
            {**base, "graph6": "A_", "solved_at": "2026-03-01T00:00:00+00:00"},
            {**base, "graph6": "A?", "solved_at": "2026-05-01T00:00:00+00:00"},
        ]
        path.write_text("".join(json.dumps(r) + "\n" for r in lines))
        assert ResultCache(path).last_run().month == 5
