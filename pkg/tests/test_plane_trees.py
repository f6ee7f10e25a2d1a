"""
    Tests for plane spanning trees, their shapes and the hull transversals
"""

import numpy as np
import pytest

from heterochromatic import oracles
from heterochromatic.geometry import build_point_set
from heterochromatic.plane_trees import (
    NotConvexPosition,
    PlaneTree,
    TransversalKind,
    WrongInteriorCount,
    classify_tree,
    complement_plane_tree,
    conjecture_scan,
    enumerate_plane_spanning_trees,
    find_plane_tree_within,
    hull_transversal,
    interior_transversal,
    is_plane_spanning_tree,
    maximal_angle_pair,
    plane_tree_hypergraph,
    split_by_diagonal,
)
from heterochromatic.random_instances import random_one_interior
from heterochromatic.utils import TooLarge, bits, mask_of, popcount


class TestEnumeration:
    @pytest.mark.parametrize(
        "fixture, count",
        [
            ("setup_triangle", 3),
            ("setup_square", 12),
            ("setup_pentagon", 55),
            ("setup_triangle_interior", 16),
        ],
    )
    def test_counts(self, fixture, count, request):
        point_set = request.getfixturevalue(fixture)
        assert len(enumerate_plane_spanning_trees(point_set)) == count

    @pytest.mark.parametrize(
        "fixture", ["setup_square", "setup_kite", "setup_square_interior", "setup_pentagon"]
    )
    def test_against_oracle(self, fixture, request):
        point_set = request.getfixturevalue(fixture)
        trees = [tuple(tree.edge_ids()) for tree in enumerate_plane_spanning_trees(point_set)]
        assert trees == sorted(oracles.naive_plane_trees(point_set))

    def test_no_duplicates(self, setup_kite):
        trees = enumerate_plane_spanning_trees(setup_kite)
        assert len({tree.edges for tree in trees}) == len(trees)
        assert all(len(tree) == 4 for tree in trees)

    def test_cap(self, setup_pentagon):
        with pytest.raises(TooLarge):
            enumerate_plane_spanning_trees(setup_pentagon, cap=4)

    def test_hypergraph(self, setup_square):
        hypergraph = plane_tree_hypergraph(setup_square)
        assert hypergraph.nu == 6
        assert len(hypergraph) == 12
        assert hypergraph[0] == 0b000111


class TestTreePredicates:
    def test_is_plane_spanning_tree(self, setup_square):
        assert is_plane_spanning_tree(setup_square, 0b000111)
        assert is_plane_spanning_tree(setup_square, mask_of([0, 3, 5]))
        # the two diagonals cross
        assert not is_plane_spanning_tree(setup_square, mask_of([0, 1, 4]))
        # triangle 0 1 2 is a cycle
        assert not is_plane_spanning_tree(setup_square, mask_of([0, 1, 3]))
        assert not is_plane_spanning_tree(setup_square, mask_of([0, 1]))

    def test_find_within(self, setup_square):
        tree = find_plane_tree_within(setup_square, mask_of([0, 1, 4, 5]))
        assert tree.edge_ids() == [0, 1, 5]
        assert find_plane_tree_within(setup_square, mask_of([0, 5])) is None

    def test_pairs(self, setup_square):
        assert PlaneTree(mask_of([0, 3, 5])).pairs(setup_square) == [(0, 1), (1, 2), (2, 3)]


class TestClassify:
    def test_star(self, setup_square):
        shape = classify_tree(PlaneTree(0b000111), setup_square)
        assert shape.is_star and shape.is_caterpillar

    def test_hull_path(self, setup_square):
        tree = PlaneTree(mask_of([0, 3, 5]))
        shape = classify_tree(tree, setup_square)
        assert not shape.is_star
        assert shape.is_geometric_caterpillar
        assert complement_plane_tree(tree, setup_square) is None

    def test_path_through_diagonal(self, setup_square):
        tree = PlaneTree(mask_of([0, 4, 5]))
        shape = classify_tree(tree, setup_square)
        assert shape.is_caterpillar
        assert not shape.is_geometric_caterpillar
        complement = complement_plane_tree(tree, setup_square)
        assert complement is not None
        assert complement.edges & tree.edges == 0

    def test_interior_star(self, setup_kite):
        star = PlaneTree(mask_of([3, 6, 8, 9]))
        shape = classify_tree(star, setup_kite)
        assert shape.is_star
        assert not shape.is_geometric_caterpillar
        assert complement_plane_tree(star, setup_kite) is None

    def test_kite_caterpillar(self, setup_kite):
        tree = PlaneTree(mask_of([2, 4, 7, 9]))
        shape = classify_tree(tree, setup_kite)
        assert shape.is_geometric_caterpillar
        assert complement_plane_tree(tree, setup_kite) is None

    def test_interior_body(self, setup_kite):
        tree = PlaneTree(mask_of([3, 6, 7, 8]))
        assert not classify_tree(tree, setup_kite).is_geometric_caterpillar
        assert complement_plane_tree(tree, setup_kite) is not None

    @pytest.mark.parametrize("fixture", ["setup_kite", "setup_pentagon", "setup_square_interior"])
    def test_complement_characterisation(self, fixture, request):
        point_set = request.getfixturevalue(fixture)
        naive = [mask_of(tree) for tree in oracles.naive_plane_trees(point_set)]
        for tree in enumerate_plane_spanning_trees(point_set):
            shape = classify_tree(tree, point_set)
            blocked = not any(other & tree.edges == 0 for other in naive)
            assert blocked == (shape.is_star or shape.is_geometric_caterpillar)
            assert (complement_plane_tree(tree, point_set) is None) == blocked


class TestTransversals:
    def test_hull(self, setup_square):
        q = hull_transversal(setup_square)
        assert q.kind is TransversalKind.HULL_ONLY
        assert sorted(bits(q.edges)) == [0, 2, 3, 5]
        assert q.as_double_transversal().size == 4

    def test_hull_rejects_interior(self, setup_kite):
        with pytest.raises(NotConvexPosition):
            hull_transversal(setup_kite)

    def test_interior_rejects_convex(self, setup_square):
        with pytest.raises(WrongInteriorCount):
            interior_transversal(setup_square)

    def test_kite(self, setup_kite):
        assert maximal_angle_pair(setup_kite, 4) == (0, 2)
        q = interior_transversal(setup_kite)
        assert q.kind is TransversalKind.HULL_PLUS_INTERIOR
        assert sorted(bits(q.edges)) == [0, 2, 3, 4, 7, 8]

    def test_tie_breaks_lexicographically(self, setup_square_interior, setup_triangle_interior):
        assert maximal_angle_pair(setup_square_interior, 4) == (0, 2)
        assert sorted(bits(interior_transversal(setup_square_interior).edges)) == [0, 2, 3, 4, 7, 8]
        assert maximal_angle_pair(setup_triangle_interior, 3) == (0, 2)
        assert sorted(bits(interior_transversal(setup_triangle_interior).edges)) == [0, 1, 2, 3, 5]

    @pytest.mark.parametrize(
        "fixture, transversal",
        [
            ("setup_square", hull_transversal),
            ("setup_pentagon", hull_transversal),
            ("setup_kite", interior_transversal),
            ("setup_square_interior", interior_transversal),
            ("setup_triangle_interior", interior_transversal),
        ],
    )
    def test_meets_every_tree_twice(self, fixture, transversal, request):
        point_set = request.getfixturevalue(fixture)
        q = transversal(point_set)
        assert len(q) == point_set.n + point_set.interior_count
        for tree in enumerate_plane_spanning_trees(point_set):
            assert popcount(tree.edges & q.edges) >= 2

    @pytest.mark.parametrize("seed", range(5))
    def test_angle_matches_floating_point(self, seed):
        point_set = random_one_interior(6, np.random.RandomState(seed))
        w = point_set.interior[0]
        u, v = maximal_angle_pair(point_set, w)
        points = point_set.points
        widest = max(
            oracles.float_angle(points[w], points[a], points[b])
            for a in range(point_set.n)
            for b in range(a + 1, point_set.n)
            if w not in (a, b)
        )
        assert oracles.float_angle(points[w], points[u], points[v]) == pytest.approx(widest)


class TestSplitAndScan:
    def test_split_by_diagonal(self, setup_pentagon):
        left, right = split_by_diagonal(setup_pentagon, 1)
        assert left == [0, 2, 3, 4]
        assert right == [0, 1, 2]

    @pytest.mark.parametrize("n", [6, 7])
    def test_transversal_splits_along_diagonals(self, n):
        def labelled(point_set, mask, labels):
            pairs = set()
            for e in bits(mask):
                a, b = point_set.edges[e]
                pairs.add(tuple(sorted((labels[a], labels[b]))))
            return pairs

        checked = 0
        for seed in range(10):
            point_set = random_one_interior(n, np.random.RandomState(seed))
            w = point_set.interior[0]
            u, v = maximal_angle_pair(point_set, w)
            expected = labelled(point_set, interior_transversal(point_set).edges, range(n))
            hull = point_set.hull
            for i, a in enumerate(hull):
                for j in range(i + 2, len(hull) - (i == 0)):
                    b = hull[j]
                    left, right = split_by_diagonal(point_set, point_set.edge_id(a, b))
                    inside, other = (left, right) if w in left else (right, left)
                    if u not in inside or v not in inside:
                        continue
                    near = build_point_set([point_set.points[k] for k in inside])
                    far = build_point_set([point_set.points[k] for k in other])
                    combined = labelled(near, interior_transversal(near).edges, inside)
                    combined |= labelled(far, far.hull_edges, other)
                    assert combined - {tuple(sorted((a, b)))} == expected
                    checked += 1
        assert checked > 0

    def test_convex_scan(self, setup_pentagon):
        report = conjecture_scan(setup_pentagon)
        assert report.tau == 5 and report.tau_exact
        assert report.bound == 5 and report.holds
        assert report.predicted_hc == 7
        assert report.exact_hc == 7
        assert len(report.witness) == report.tau

    def test_one_interior_scan(self, setup_kite):
        report = conjecture_scan(setup_kite)
        assert report.interior == 1
        assert report.tau == 6
        assert report.holds
        assert report.exact_hc == 6

    def test_skips_exact_above_cap(self, setup_kite):
        assert conjecture_scan(setup_kite, cap_nu=9).exact_hc is None

    def test_tau_cap(self, setup_kite):
        with pytest.raises(TooLarge):
            conjecture_scan(setup_kite, tau_cap=9)
