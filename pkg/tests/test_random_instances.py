"""
    Tests for the random instance generators
"""

import numpy as np
import pytest

from heterochromatic.geometry import TooFewPoints
from heterochromatic.random_instances import (
    GenerationFailed,
    random_colouring,
    random_connected_graph,
    random_convex,
    random_general,
    random_hypergraph,
    random_one_interior,
    random_point_set,
)


class TestPointSets:
    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_convex(self, n):
        point_set = random_convex(n, np.random.RandomState(n))
        assert point_set.n == n
        assert point_set.interior_count == 0

    @pytest.mark.parametrize("n", [4, 5, 7])
    def test_one_interior(self, n):
        point_set = random_one_interior(n, np.random.RandomState(n))
        assert point_set.n == n
        assert point_set.interior_count == 1

    def test_one_interior_needs_four_points(self):
        with pytest.raises(GenerationFailed):
            random_one_interior(3, np.random.RandomState(0))

    def test_general_interior(self):
        point_set = random_general(6, np.random.RandomState(1), interior=2)
        assert point_set.interior_count == 2

    @pytest.mark.parametrize("generator", [random_convex, random_one_interior, random_general])
    def test_too_few(self, generator):
        with pytest.raises(TooFewPoints):
            generator(2, np.random.RandomState(0))

    def test_seeded(self):
        assert random_point_set("general", 6, 9).points == random_point_set("general", 6, 9).points
        assert random_point_set("convex", 6, 9).points != random_point_set("convex", 6, 10).points

    def test_incorrect_seed(self):
        with pytest.raises(TypeError):
            random_point_set("convex", 5, "9")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            random_point_set("concave", 5, 0)


class TestColouringsAndGraphs:
    @pytest.mark.parametrize("m, k", [(10, 7), (6, 6), (6, 1)])
    def test_colouring_surjective(self, m, k):
        colouring = random_colouring(m, k, np.random.RandomState(0))
        assert len(colouring) == m
        assert colouring.k == k

    @pytest.mark.parametrize("m, k", [(3, 4), (3, 0)])
    def test_colouring_impossible(self, m, k):
        with pytest.raises(ValueError):
            random_colouring(m, k, np.random.RandomState(0))

    def test_hypergraph(self):
        hypergraph = random_hypergraph(6, 5, np.random.RandomState(2))
        assert hypergraph.nu == 6
        assert 1 <= len(hypergraph) <= 5

    def test_connected_graph(self):
        graph = random_connected_graph(6, 0.5, np.random.RandomState(0))
        assert graph.vertex_count == 6
        assert graph.is_connected()
