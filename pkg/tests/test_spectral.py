import numpy as np
import pytest

from src.bitgraph import (
    brute_force_min_bisection,
    fiedler_pair,
    jacobi_eigh,
    laplacian,
    random_graph,
    spectral_bisection,
)
from src.models import Graph


def test_laplacian_of_an_edge():
    assert laplacian(Graph.from_edges(2, [(0, 1)])).tolist() == [[1, -1], [-1, 1]]


def test_laplacian_of_empty_graph():
    assert not laplacian(Graph.empty(4)).any()


@pytest.mark.parametrize("seed", range(5))
def test_jacobi_matches_numpy(seed):
    g = random_graph(9, seed)
    lap = laplacian(g)
    values, vectors = jacobi_eigh(lap)
    np.testing.assert_allclose(values, np.linalg.eigh(lap)[0], atol=1e-9)
    np.testing.assert_allclose(lap @ vectors, vectors * values, atol=1e-9)


def test_fiedler_of_a_path():
    value, u = fiedler_pair(Graph.path(3))
    assert value == pytest.approx(1.0)
    np.testing.assert_allclose(u, np.array([1.0, 0.0, -1.0]) / np.sqrt(2), atol=1e-9)


def test_algebraic_connectivity_of_k4():
    assert fiedler_pair(Graph.complete(4))[0] == pytest.approx(4.0)


def test_fiedler_needs_two_nodes():
    with pytest.raises(ValueError):
        fiedler_pair(Graph.empty(1))


def test_disjoint_triangles_split_along_components():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    split = spectral_bisection(g)
    assert {split.part1, split.part2} == {(0, 1, 2), (3, 4, 5)}
    assert split.cut_size == 0


def test_path_bisection_sizes():
    split = spectral_bisection(Graph.path(3))
    assert len(split.part1) == 1
    assert len(split.part2) == 2


def test_six_cycle_reaches_the_minimum_cut():
    assert spectral_bisection(Graph.cycle(6)).cut_size == 2


def test_brute_force_bisection_of_six_cycle():
    split = brute_force_min_bisection(Graph.cycle(6))
    assert split.cut_size == 2
    assert len(split.part1) == 3
    assert set(split.part1) | set(split.part2) == set(range(6))


@pytest.mark.parametrize("seed", range(5))
def test_spectral_cut_never_beats_the_minimum(seed):
    g = random_graph(8, seed)
    assert spectral_bisection(g).cut_size >= brute_force_min_bisection(g).cut_size


def test_brute_force_bisection_size_limit():
    with pytest.raises(ValueError):
        brute_force_min_bisection(Graph.empty(13))


@pytest.mark.parametrize("seed", range(8))
def test_fiedler_vector_is_an_orthogonal_eigenvector(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(4 + seed % 6, rng)
    while not g.is_connected():
        g = random_graph(g.n, rng)
    value, u = fiedler_pair(g)
    assert abs(u.sum()) < 1e-9
    assert np.linalg.norm(u) == pytest.approx(1.0)
    assert np.abs(laplacian(g) @ u - value * u).max() < 1e-9
