import csv
import json
from pathlib import Path

import pytest

from src.main import build_parser, main

SHIPPED_CODE = Path(__file__).parent.parent / "data" / "codes" / "n5_k6_d2.code"


def run(tmp_path, *args):
    return main(["--quiet", "--out", str(tmp_path), *args])


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


class TestParser:
    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_unknown_solver_rejected(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["search", "--n", "4", "--solver", "greedy"])


class TestEnumerate:
    def test_lc_classes_of_three(self, tmp_path):
        assert run(tmp_path, "enumerate", "--n", "3") == 0
        listing = (tmp_path / "classes_n3_lc.g6").read_text().splitlines()
        assert len(listing) == 3
        rows = read_csv(tmp_path / "classes_n3_lc.csv")
        assert sum(int(r["class_size"]) for r in rows) == 8

    def test_iso_classes_of_four(self, tmp_path):
        assert run(tmp_path, "enumerate", "--n", "4", "--relation", "iso") == 0
        assert len((tmp_path / "classes_n4_iso.g6").read_text().splitlines()) == 11


class TestVerify:
    def test_shipped_code(self, tmp_path):
        assert run(tmp_path, "verify", str(SHIPPED_CODE)) == 0

    def test_shipped_code_with_oracle(self, tmp_path):
        assert run(tmp_path, "verify", str(SHIPPED_CODE), "--oracle") == 0

    def test_invalid_code(self, tmp_path):
        bad = tmp_path / "bad.code"
        # 11000 and 10110 differ by the image of Y on qubit 2
        lines = SHIPPED_CODE.read_text().splitlines()
        bad.write_text("\n".join([*lines[:2], "11000", *lines[3:]]) + "\n")
        assert run(tmp_path, "verify", str(bad), "--oracle") == 1

    def test_unreadable_file(self, tmp_path):
        garbage = tmp_path / "garbage.code"
        garbage.write_text("not a code file\n")
        assert run(tmp_path, "verify", str(garbage)) == 2

    def test_missing_file(self, tmp_path):
        assert run(tmp_path, "verify", str(tmp_path / "absent.code")) == 2


class TestSearch:
    def test_exhaustive_four_qubits(self, tmp_path):
        assert run(tmp_path, "search", "--n", "4", "--d", "2", "--solver", "exact", "--no-cache") == 0
        summaries = list(tmp_path.glob("search_exhaustive_n4_*_summary.json"))
        assert len(summaries) == 1
        summary = json.loads(summaries[0].read_text())
        assert summary["best_K"] == 4
        assert summary["graphs"] == 6

        best = list(tmp_path.glob("*_best.code"))
        assert len(best) == 1
        assert run(tmp_path, "verify", str(best[0]), "--oracle") == 0

    def test_cache_file_written(self, tmp_path):
        cache = tmp_path / "cache.jsonl"
        args = ("search", "--n", "4", "--d", "2", "--cache", str(cache))
        assert run(tmp_path, *args) == 0
        assert len(cache.read_text().splitlines()) == 6
        assert run(tmp_path, *args) == 0
        assert len(cache.read_text().splitlines()) == 6

    def test_bad_error_set(self, tmp_path):
        assert run(tmp_path, "search", "--n", "4", "--error-set", "bitflip:1", "--no-cache") == 2


class TestBounds:
    def test_small_table(self, tmp_path):
        assert run(tmp_path, "bounds", "--n-min", "2", "--n-max", "5", "--d-min", "2", "--d-max", "2", "--pure") == 0
        rows = read_csv(tmp_path / "bounds_n2-5_d2-2.csv")
        assert [int(r["lp_K"]) for r in rows] == [1, 1, 4, 6]
        assert [r["pure_lp_K"] for r in rows] == [r["lp_K"] for r in rows]
        assert not any(r["mismatch"] for r in rows)


class TestClusterHist:
    def test_random_sample(self, tmp_path):
        assert run(tmp_path, "cluster-hist", "--n", "5", "--d", "2", "--samples", "10", "--seed", "1") == 0
        [path] = tmp_path.glob("cluster_hist_n5_*.csv")
        assert sum(int(r["count"]) for r in read_csv(path)) == 10

    def test_class_representatives(self, tmp_path):
        assert run(tmp_path, "cluster-hist", "--n", "4", "--d", "2") == 0
        [path] = tmp_path.glob("cluster_hist_n4_*.csv")
        assert sum(int(r["count"]) for r in read_csv(path)) == 6


class TestGaCompare:
    def test_tiny_comparison(self, tmp_path):
        code = run(
            tmp_path, "ga-compare", "--n", "5", "--d", "2", "--instances", "2", "--seed", "1",
            "--ga-population", "6", "--ga-generations", "3", "--ga-tournament", "2",
        )
        assert code == 0
        [runs] = tmp_path.glob("ga_compare_n5_*[0-9].jsonl")
        records = [json.loads(line) for line in runs.read_text().splitlines()]
        assert len(records) == 4
        assert {r["crossover"] for r in records} == {"spectral", "random"}
        [means] = tmp_path.glob("ga_compare_n5_*_mean_best.csv")
        assert len(read_csv(means)) == 4
