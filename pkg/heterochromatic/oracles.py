"""
    Brute-force oracles

    Slow reference implementations that share no search code with the rest
    of the package. The verification suites re-check every counterexample
    against them, and the tests compare the fast searches with them.
"""

import math
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx

from .geometry import Point, PointSet, segments_cross
from .hypergraph import Colouring, Hypergraph
from .matroid import MatroidOracle
from .utils import mask_of, popcount, set_partitions


def naive_plane_trees(point_set: PointSet) -> List[Tuple[int, ...]]:
    """ Every ``(n - 1)``-subset of edges that is a crossing-free spanning tree """
    n = point_set.n
    segments = [
        (point_set.points[a], point_set.points[b]) for a, b in point_set.edges
    ]
    trees = []
    for chosen in combinations(range(point_set.edge_count), n - 1):
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(point_set.edges[e] for e in chosen)
        if not nx.is_tree(graph):
            continue
        if any(segments_cross(segments[e], segments[f]) for e, f in combinations(chosen, 2)):
            continue
        trees.append(chosen)
    return trees


def heterochromatic_number_naive(hypergraph: Hypergraph) -> int:
    """ One more than the most blocks of a partition with no rainbow hyperedge """
    best = 1
    for labels in set_partitions(hypergraph.nu):
        blocks = max(labels) + 1
        if blocks <= best:
            continue
        colouring = Colouring([label + 1 for label in labels])
        if not any(colouring.is_rainbow(edge) for edge in hypergraph):
            best = blocks
    return best + 1


def naive_tau(hypergraph: Hypergraph) -> int:
    """ Smallest double transversal by trying subsets in order of size """
    for size in range(hypergraph.nu + 1):
        for chosen in combinations(range(hypergraph.nu), size):
            mask = mask_of(chosen)
            if all(popcount(edge & mask) >= 2 for edge in hypergraph):
                return size
    raise ValueError("Some hyperedge has fewer than two vertices.")


def float_angle(apex: Point, u: Point, v: Point) -> float:
    """ The convex angle ``u apex v`` in radians, in floating point """
    first = math.atan2(u[1] - apex[1], u[0] - apex[0])
    second = math.atan2(v[1] - apex[1], v[0] - apex[0])
    angle = abs(first - second)
    return 2 * math.pi - angle if angle > math.pi else angle


def rainbow_plane_tree_exists(point_set: PointSet, colouring: Colouring) -> bool:
    return any(
        len({colouring[e] for e in tree}) == len(tree) for tree in naive_plane_trees(point_set)
    )


def naive_bases(matroid: MatroidOracle) -> List[int]:
    return [
        mask_of(chosen)
        for chosen in combinations(range(matroid.ground_size), matroid.rank)
        if matroid.is_independent(mask_of(chosen))
    ]


def rainbow_basis_exists(matroid: MatroidOracle, colouring: Colouring) -> bool:
    return any(colouring.is_rainbow(basis) for basis in naive_bases(matroid))


def first_rainbow_tree(point_set: PointSet, colouring: Colouring) -> Optional[Tuple[int, ...]]:
    for tree in naive_plane_trees(point_set):
        if colouring.is_rainbow(mask_of(tree)):
            return tree
    return None

