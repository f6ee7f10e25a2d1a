"""
    Plane spanning trees of the complete geometric graph on a ``PointSet``
"""

from enum import Enum
from typing import Iterator, List, NamedTuple, Optional, Tuple

from networkx.utils import UnionFind

from .algorithms.partition_search import heterochromatic_number_exact
from .algorithms.transversal import double_transversal_search
from .geometry import Comparison, Orientation, PointSet, angle_compare
from .hypergraph import DoubleTransversal, Hypergraph
from .utils import (
    ENUMERATION_CAP,
    HC_CAP,
    TAU_CAP,
    InstanceError,
    TooLarge,
    binomial2,
    bits,
    popcount,
)


class PlaneTreeError(InstanceError):
    pass


class NotConvexPosition(PlaneTreeError):
    def __init__(self, interior: int) -> None:
        self.interior = interior
        super().__init__(f"Points are not in convex position: i(P) = {interior}.")


class WrongInteriorCount(PlaneTreeError):
    def __init__(self, expected: int, got: int) -> None:
        self.expected = expected
        self.got = got
        super().__init__(f"Expected i(P) = {expected}, got {got}.")


class NotAPlaneTree(PlaneTreeError):
    pass


class PlaneTree(NamedTuple):
    """
        A plane spanning tree, stored as a bitmask over the edge ids of its
        point set
    """

    edges: int

    def edge_ids(self) -> List[int]:
        return list(bits(self.edges))

    def pairs(self, point_set: PointSet) -> List[Tuple[int, int]]:
        return [point_set.edges[e] for e in bits(self.edges)]

    def __len__(self) -> int:
        return popcount(self.edges)


class TreeClass(NamedTuple):
    is_star: bool
    is_caterpillar: bool
    is_geometric_caterpillar: bool


class TransversalKind(Enum):
    HULL_ONLY = "HullOnly"
    HULL_PLUS_INTERIOR = "HullPlusInterior"


class TransversalQ(NamedTuple):
    edges: int
    kind: TransversalKind

    def __len__(self) -> int:
        return popcount(self.edges)

    def as_double_transversal(self) -> DoubleTransversal:
        return DoubleTransversal(self.edges)


def _check_cap(point_set: PointSet, cap: int) -> None:
    if point_set.n > cap:
        raise TooLarge("n", point_set.n, cap)


def _plane_trees(point_set: PointSet, allowed: int) -> Iterator[int]:
    """
        Backtracking over edge ids in increasing order

        Edges are added in increasing id order, so trees come out in
        lexicographic order of their sorted edge ids. A branch is cut when the
        edge would close a cycle or cross a chosen edge, or when the edges
        still available cannot connect the current components.
    """
    n = point_set.n
    ends = point_set.edges
    crossing = point_set.crossing_masks
    m = point_set.edge_count

    def connectable(labels: Tuple[int, ...], candidates: int) -> bool:
        components = UnionFind(range(n))
        for v in range(n):
            components.union(v, labels[v])
        for e in bits(candidates):
            components.union(*ends[e])
        return len({components[v] for v in range(n)}) == 1

    def extend(start: int, chosen: int, blocked: int, labels: Tuple[int, ...], count: int):
        if count == n - 1:
            yield chosen
            return
        candidates = allowed & ~blocked & ~((1 << start) - 1)
        if popcount(candidates) < n - 1 - count or not connectable(labels, candidates):
            return
        for e in bits(candidates):
            a, b = ends[e]
            la, lb = labels[a], labels[b]
            if la == lb:
                continue
            merged = tuple(la if label == lb else label for label in labels)
            yield from extend(e + 1, chosen | 1 << e, blocked | crossing[e], merged, count + 1)

    if n < 2:
        return
    yield from extend(0, 0, 0, tuple(range(n)), 0)


def enumerate_plane_spanning_trees(
    point_set: PointSet, cap: int = ENUMERATION_CAP
) -> List[PlaneTree]:
    """
        Every plane spanning tree of the complete geometric graph, once each

        Parameters
        ----------
        point_set: PointSet
        cap: int, optional
            Largest accepted number of points. Defaults to ``ENUMERATION_CAP``.

        Returns
        -------
        List[PlaneTree]
            In lexicographic order of sorted edge ids.

        Raises
        ------
        TooLarge
            If the point set has more than ``cap`` points.

        Examples
        --------
        >>> from heterochromatic.geometry import build_point_set
        >>> len(enumerate_plane_spanning_trees(build_point_set([(0, 0), (4, 0), (4, 4), (0, 4)])))
        12
    """
    _check_cap(point_set, cap)
    everything = (1 << point_set.edge_count) - 1
    return [PlaneTree(mask) for mask in _plane_trees(point_set, everything)]


def plane_tree_hypergraph(point_set: PointSet, cap: int = ENUMERATION_CAP) -> Hypergraph:
    """ Vertices are the edges of the geometric graph, hyperedges its plane spanning trees """
    trees = enumerate_plane_spanning_trees(point_set, cap)
    return Hypergraph(point_set.edge_count, [tree.edges for tree in trees])


def is_plane_spanning_tree(point_set: PointSet, edges: int) -> bool:
    n = point_set.n
    if popcount(edges) != n - 1:
        return False
    for e in bits(edges):
        if point_set.crossing_masks[e] & edges:
            return False
    labels = list(range(n))
    for e in bits(edges):
        a, b = point_set.edges[e]
        la, lb = labels[a], labels[b]
        if la == lb:
            return False
        labels = [la if label == lb else label for label in labels]
    return True


def find_plane_tree_within(point_set: PointSet, allowed: int) -> Optional[PlaneTree]:
    """
        The first plane spanning tree using only ``allowed`` edges

        Returns
        -------
        Optional[PlaneTree]
            ``None`` when no such tree exists.
    """
    for mask in _plane_trees(point_set, allowed):
        return PlaneTree(mask)
    return None


def _degrees(point_set: PointSet, edges: int) -> List[int]:
    degree = [0] * point_set.n
    for e in bits(edges):
        a, b = point_set.edges[e]
        degree[a] += 1
        degree[b] += 1
    return degree


def classify_tree(tree: PlaneTree, point_set: PointSet) -> TreeClass:
    """
        Star, caterpillar and geometric caterpillar tests

        Notes
        -----
        The body is what is left after removing the leaves. A tree is a
        caterpillar when no body vertex has more than two body neighbours. It
        is a geometric caterpillar when, in addition, every body vertex is a
        hull vertex, every body edge is a hull side, and the line through each
        leg leaves all tree edges not touching the leg strictly on one side.
    """
    n = point_set.n
    degree = _degrees(point_set, tree.edges)
    is_star = any(d == n - 1 for d in degree)
    body = {v for v in range(n) if degree[v] >= 2}
    body_degree = [0] * n
    body_edges = []
    legs = []
    for e in bits(tree.edges):
        a, b = point_set.edges[e]
        if a in body and b in body:
            body_degree[a] += 1
            body_degree[b] += 1
            body_edges.append(e)
        else:
            legs.append(e)
    is_caterpillar = all(body_degree[v] <= 2 for v in body)
    if not is_caterpillar:
        return TreeClass(is_star, False, False)
    on_hull = set(point_set.hull)
    geometric = body <= on_hull and all(
        point_set.hull_edges >> e & 1 for e in body_edges
    )
    if geometric:
        for leg in legs:
            ends = set(point_set.edges[leg])
            for e in bits(tree.edges):
                a, b = point_set.edges[e]
                if a in ends or b in ends:
                    continue
                if point_set.side_of_line(leg, a) != point_set.side_of_line(leg, b):
                    geometric = False
                    break
            if not geometric:
                break
    return TreeClass(is_star, True, geometric)


def complement_plane_tree(tree: PlaneTree, point_set: PointSet) -> Optional[PlaneTree]:
    """
        A plane spanning tree sharing no edge with ``tree``, or ``None``

        ``None`` is returned exactly when ``tree`` is a star or a geometric
        caterpillar.
    """
    everything = (1 << point_set.edge_count) - 1
    return find_plane_tree_within(point_set, everything & ~tree.edges)


def hull_transversal(point_set: PointSet) -> TransversalQ:
    """
        The hull sides of a point set in convex position

        Every plane spanning tree has at least two edges on the hull.

        Raises
        ------
        NotConvexPosition
            If some point is interior.
    """
    if point_set.interior_count:
        raise NotConvexPosition(point_set.interior_count)
    return TransversalQ(point_set.hull_edges, TransversalKind.HULL_ONLY)


def maximal_angle_pair(point_set: PointSet, apex: int) -> Tuple[int, int]:
    """
        The pair ``(u, v)`` maximising the convex angle ``u apex v``

        Ties go to the lexicographically smallest pair.
    """
    w = point_set.points[apex]
    others = [i for i in range(point_set.n) if i != apex]
    best = None
    for i, u in enumerate(others):
        for v in others[i + 1:]:
            if best is None:
                best = (u, v)
                continue
            rays = (point_set.points[u], point_set.points[v])
            incumbent = (point_set.points[best[0]], point_set.points[best[1]])
            if angle_compare(w, rays, incumbent) is Comparison.GREATER:
                best = (u, v)
    return best


def interior_transversal(point_set: PointSet) -> TransversalQ:
    """
        Hull sides plus the two edges ``uw`` and ``vw`` of maximal angle at
        the interior point ``w``

        Raises
        ------
        WrongInteriorCount
            If the point set does not have exactly one interior point.
    """
    if point_set.interior_count != 1:
        raise WrongInteriorCount(1, point_set.interior_count)
    w = point_set.interior[0]
    u, v = maximal_angle_pair(point_set, w)
    edges = point_set.hull_edges | 1 << point_set.edge_id(u, w) | 1 << point_set.edge_id(v, w)
    return TransversalQ(edges, TransversalKind.HULL_PLUS_INTERIOR)


def split_by_diagonal(point_set: PointSet, edge: int) -> Tuple[List[int], List[int]]:
    """
        Points on or to the left of the line through ``edge``, and points on
        or to the right of it
    """
    left, right = [], []
    ends = point_set.edges[edge]
    for k in range(point_set.n):
        if k in ends:
            left.append(k)
            right.append(k)
        elif point_set.side_of_line(edge, k) is Orientation.COUNTER_CLOCKWISE:
            left.append(k)
        else:
            right.append(k)
    return left, right


class ConjectureReport(NamedTuple):
    n: int
    interior: int
    tau: int
    tau_exact: bool
    bound: int
    holds: bool
    witness: Tuple[int, ...]
    predicted_hc: int
    exact_hc: Optional[int]


def conjecture_scan(
    point_set: PointSet,
    budget: Optional[int] = None,
    cap: int = ENUMERATION_CAP,
    cap_nu: int = HC_CAP,
    tau_cap: int = TAU_CAP,
) -> ConjectureReport:
    """
        Probe the conjectured double transversal with ``n + i(P)`` edges

        Parameters
        ----------
        point_set: PointSet
        budget: int, optional
            Node budget of the double transversal search. When it runs out the
            reported ``tau`` is an upper bound and ``tau_exact`` is ``False``.
        cap: int, optional
            Enumeration cap on ``n``.
        cap_nu: int, optional
            The exact heterochromatic number is computed only when
            ``C(n, 2) <= cap_nu``.
        tau_cap: int, optional
            Largest ``C(n, 2)`` handed to the transversal search.

        Returns
        -------
        ConjectureReport
            ``holds`` is ``tau <= n + i(P)``. ``predicted_hc`` is
            ``C(n, 2) - (n + i(P)) + 2``. ``exact_hc`` is ``None`` above
            ``cap_nu``. This is an experimental probe, not a proof.

        Raises
        ------
        TooLarge
            If ``n`` exceeds ``cap`` or ``C(n, 2)`` exceeds ``tau_cap``.
    """
    _check_cap(point_set, cap)
    nu = point_set.edge_count
    if nu > tau_cap:
        raise TooLarge("nu", nu, tau_cap)
    hypergraph = plane_tree_hypergraph(point_set, cap)
    mask, exact = double_transversal_search(hypergraph, budget)
    tau = popcount(mask)
    bound = point_set.n + point_set.interior_count
    exact_hc = heterochromatic_number_exact(hypergraph, cap_nu) if nu <= cap_nu else None
    return ConjectureReport(
        n=point_set.n,
        interior=point_set.interior_count,
        tau=tau,
        tau_exact=exact,
        bound=bound,
        holds=tau <= bound,
        witness=tuple(bits(mask)),
        predicted_hc=binomial2(point_set.n) - bound + 2,
        exact_hc=exact_hc,
    )
