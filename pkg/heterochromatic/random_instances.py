"""
    Seeded generators for point sets, colourings, hypergraphs and graphs
"""

from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from .geometry import GeometryError, Point, PointSet, TooFewPoints, build_point_set, orientation
from .hypergraph import Colouring, Hypergraph
from .matroid import GraphSpec
from .utils import InstanceError

RADIUS = 2 ** 19
MAX_TRIES = 200
KINDS = ("convex", "one-interior", "general")


class GenerationFailed(InstanceError):
    def __init__(self, kind: str, n: int, tries: int) -> None:
        self.kind = kind
        self.n = n
        self.tries = tries
        super().__init__(f"No valid {kind} instance with n = {n} after {tries} tries.")


def _circle_points(n: int, rng: np.random.RandomState) -> List[Tuple[int, int]]:
    angles = np.sort(rng.uniform(0, 2 * np.pi, n))
    xs = np.rint(RADIUS * np.cos(angles)).astype(np.int64)
    ys = np.rint(RADIUS * np.sin(angles)).astype(np.int64)
    return [(int(x), int(y)) for x, y in zip(xs, ys)]


def _audited(raw: List[Tuple[int, int]], interior: Optional[int]) -> Optional[PointSet]:
    try:
        point_set = build_point_set(raw)
    except GeometryError:
        return None
    if interior is not None and point_set.interior_count != interior:
        return None
    return point_set


def random_convex(n: int, rng: np.random.RandomState, max_tries: int = MAX_TRIES) -> PointSet:
    """ ``n`` rounded points of a large circle, audited for convex general position """
    if n < 3:
        raise TooFewPoints(n)
    for _ in range(max_tries):
        point_set = _audited(_circle_points(n, rng), interior=0)
        if point_set is not None:
            return point_set
    raise GenerationFailed("convex", n, max_tries)


def random_one_interior(
    n: int, rng: np.random.RandomState, max_tries: int = MAX_TRIES
) -> PointSet:
    """
        ``n - 1`` points in convex position and one point inside their hull

        The interior point is a random convex combination of the hull
        points, rounded to the grid.
    """
    if n < 3:
        raise TooFewPoints(n)
    if n == 3:
        raise GenerationFailed("one-interior", n, 0)
    for _ in range(max_tries):
        hull = _circle_points(n - 1, rng)
        weights = rng.dirichlet(np.ones(n - 1))
        centre = np.rint(weights @ np.array(hull, dtype=np.float64)).astype(np.int64)
        point_set = _audited(hull + [(int(centre[0]), int(centre[1]))], interior=1)
        if point_set is not None:
            return point_set
    raise GenerationFailed("one-interior", n, max_tries)


def random_general(
    n: int,
    rng: np.random.RandomState,
    interior: Optional[int] = None,
    grid: Optional[int] = None,
    max_tries: int = MAX_TRIES,
) -> PointSet:
    """
        Rejection sampling on the integer grid ``[0, grid)^2``

        Parameters
        ----------
        n: int
        rng: np.random.RandomState
        interior: int, optional
            Required number of interior points. Any number is accepted when
            omitted.
        grid: int, optional
            Side of the sampling grid. Defaults to ``64 * n``.
        max_tries: int, optional
            Rejected draws allowed, counted per point and per whole instance.
    """
    if n < 3:
        raise TooFewPoints(n)
    side = grid or 64 * n
    for _ in range(max_tries):
        points: List[Point] = []
        rejected = 0
        while len(points) < n and rejected < max_tries:
            x, y = (int(v) for v in rng.randint(0, side, size=2))
            candidate = Point(x, y)
            if candidate in points or any(
                orientation(points[i], points[j], candidate) == 0
                for i in range(len(points))
                for j in range(i + 1, len(points))
            ):
                rejected += 1
                continue
            points.append(candidate)
        if len(points) < n:
            continue
        point_set = _audited([tuple(p) for p in points], interior)
        if point_set is not None:
            return point_set
    raise GenerationFailed("general", n, max_tries)


def random_point_set(kind: str, n: int, seed: int) -> PointSet:
    """
        Deterministic point set of the given kind

        Parameters
        ----------
        kind: str
            One of ``"convex"``, ``"one-interior"`` and ``"general"``.
        n: int
        seed: int

        Raises
        ------
        TypeError
            If ``seed`` is not an integer.
        ValueError
            For an unknown ``kind``.
    """
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise TypeError("seed should be of type int")
    rng = np.random.RandomState(seed)
    if kind == "convex":
        return random_convex(n, rng)
    if kind == "one-interior":
        return random_one_interior(n, rng)
    if kind == "general":
        return random_general(n, rng)
    raise ValueError(f"Unknown kind {kind!r}; choose from {', '.join(KINDS)}")


def random_colouring(m: int, k: int, rng: np.random.RandomState) -> Colouring:
    """ A uniformly shuffled surjective colouring of ``m`` items by ``1 .. k`` """
    if not 1 <= k <= m:
        raise ValueError(f"Cannot colour {m} items surjectively with {k} colours.")
    colours = np.concatenate([np.arange(1, k + 1), rng.randint(1, k + 1, size=m - k)])
    rng.shuffle(colours)
    return Colouring([int(c) for c in colours])


def random_hypergraph(nu: int, size: int, rng: np.random.RandomState) -> Hypergraph:
    """ ``size`` random hyperedges with between 2 and ``nu`` vertices each """
    edges = []
    for _ in range(size):
        width = rng.randint(2, nu + 1)
        edges.append({int(v) for v in rng.choice(nu, size=width, replace=False)})
    return Hypergraph(nu, edges)


def random_connected_graph(
    n: int, p: float, rng: np.random.RandomState, max_tries: int = MAX_TRIES
) -> GraphSpec:
    for _ in range(max_tries):
        graph = nx.gnp_random_graph(n, p, seed=int(rng.randint(0, 1e7)))
        if nx.is_connected(graph):
            return GraphSpec.from_networkx(graph)
    raise GenerationFailed("graph", n, max_tries)
