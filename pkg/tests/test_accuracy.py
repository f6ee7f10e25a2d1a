"""
    Accuracy tests of the searches and constructions against known values
"""

import numpy as np
import pytest

from heterochromatic import oracles
from heterochromatic.algorithms import heterochromatic_number_exact, min_double_transversal
from heterochromatic.hypergraph import canonical_colourings, has_rainbow_hyperedge, lower_bound_colouring
from heterochromatic.matroid import basis_hypergraph, gamma, make_graphic, tau_bases
from heterochromatic.plane_trees import (
    classify_tree,
    complement_plane_tree,
    enumerate_plane_spanning_trees,
    hull_transversal,
    interior_transversal,
    is_plane_spanning_tree,
    plane_tree_hypergraph,
)
from heterochromatic.rainbow import rainbow_basis, rainbow_tree_one_interior
from heterochromatic.random_instances import (
    random_colouring,
    random_connected_graph,
    random_convex,
    random_general,
    random_hypergraph,
    random_one_interior,
)
from heterochromatic.utils import binomial2, mask_of, popcount
from heterochromatic.verification import DEFAULT_MATROIDS, named_graph, named_matroid


def instance_seeds(count, seed=0):
    np.random.seed(seed)
    return [int(s) for s in np.random.randint(low=0, high=1e7, size=count)]


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5])
def test_convex_exact(n):
    for seed in instance_seeds(20, n):
        hypergraph = plane_tree_hypergraph(random_convex(n, np.random.RandomState(seed)))
        assert heterochromatic_number_exact(hypergraph) == binomial2(n) - n + 2


@pytest.mark.slow
def test_one_interior_exact():
    for seed in instance_seeds(20, 5):
        hypergraph = plane_tree_hypergraph(random_one_interior(5, np.random.RandomState(seed)))
        _, tau = min_double_transversal(hypergraph)
        assert tau == 6
        assert heterochromatic_number_exact(hypergraph) == 6


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_one_interior_constructive(n):
    for seed in instance_seeds(2, n):
        rng = np.random.RandomState(seed)
        point_set = random_one_interior(n, rng)
        hypergraph = plane_tree_hypergraph(point_set)
        blocker = lower_bound_colouring(hypergraph, interior_transversal(point_set).as_double_transversal())
        assert has_rainbow_hyperedge(hypergraph, blocker) is None
        k = binomial2(n) - n + 1
        for _ in range(1000):
            colouring = random_colouring(point_set.edge_count, k, rng)
            tree = rainbow_tree_one_interior(point_set, colouring)
            assert is_plane_spanning_tree(point_set, tree.edges)
            assert colouring.is_rainbow(tree.edges)


def sized(sizes, slow_from):
    return [pytest.param(n, marks=pytest.mark.slow) if n >= slow_from else n for n in sizes]


@pytest.mark.parametrize("n", sized(range(3, 9), 7))
def test_hull_transversal_meets_every_tree(n):
    for seed in instance_seeds(20, n):
        point_set = random_convex(n, np.random.RandomState(seed))
        q = hull_transversal(point_set).edges
        for tree in enumerate_plane_spanning_trees(point_set):
            assert popcount(tree.edges & q) >= 2


@pytest.mark.parametrize("n", sized(range(4, 9), 7))
def test_interior_transversal_meets_every_tree(n):
    for seed in instance_seeds(20, n):
        point_set = random_one_interior(n, np.random.RandomState(seed))
        q = interior_transversal(point_set).edges
        for tree in enumerate_plane_spanning_trees(point_set):
            assert popcount(tree.edges & q) >= 2


@pytest.mark.parametrize("n", sized(range(4, 8), 7))
@pytest.mark.parametrize("generator", [random_convex, random_one_interior, random_general])
def test_complement_characterisation(generator, n):
    for seed in instance_seeds(5, n):
        point_set = generator(n, np.random.RandomState(seed))
        naive = [mask_of(tree) for tree in oracles.naive_plane_trees(point_set)] if n <= 6 else None
        for tree in enumerate_plane_spanning_trees(point_set):
            shape = classify_tree(tree, point_set)
            blocked = complement_plane_tree(tree, point_set) is None
            assert blocked == (shape.is_star or shape.is_geometric_caterpillar)
            if naive is not None:
                assert blocked == (not any(other & tree.edges == 0 for other in naive))


@pytest.mark.parametrize("name", DEFAULT_MATROIDS)
def test_rainbow_basis_exhaustive(name):
    matroid = named_matroid(name)
    tau = tau_bases(matroid)
    for colouring in canonical_colourings(matroid.ground_size, matroid.ground_size - tau + 2):
        basis = rainbow_basis(matroid, colouring, tau=tau)
        assert matroid.is_basis(basis)
        assert colouring.is_rainbow(basis)


@pytest.mark.parametrize("name", DEFAULT_MATROIDS)
def test_corollary(name):
    matroid = named_matroid(name)
    hypergraph = basis_hypergraph(matroid)
    _, tau = min_double_transversal(hypergraph)
    assert heterochromatic_number_exact(hypergraph) == matroid.ground_size - tau + 2


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5])
def test_complete_graph_values(n):
    hypergraph = basis_hypergraph(make_graphic(named_graph(f"K{n}")))
    _, tau = min_double_transversal(hypergraph)
    assert tau == 2 * n - 3
    assert heterochromatic_number_exact(hypergraph) == binomial2(n - 2) + 2


@pytest.mark.parametrize("name", ["P3", "P4", "P5", "C3", "C4", "C5", "S3", "S4", "K4", "K5", "K_2_3"])
def test_gamma_equals_tau(name):
    graph = named_graph(name)
    assert gamma(graph) == tau_bases(make_graphic(graph))


@pytest.mark.parametrize("seed", range(4))
def test_gamma_equals_tau_random(seed):
    graph = random_connected_graph(6, 0.5, np.random.RandomState(seed))
    assert gamma(graph) == tau_bases(make_graphic(graph))


def test_partition_search_oracle():
    rng = np.random.RandomState(0)
    for _ in range(50):
        nu = int(rng.randint(2, 9))
        hypergraph = random_hypergraph(nu, int(rng.randint(1, 2 * nu + 1)), rng)
        assert heterochromatic_number_exact(hypergraph) == oracles.heterochromatic_number_naive(
            hypergraph
        )
