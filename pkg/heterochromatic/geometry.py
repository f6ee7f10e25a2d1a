"""
    Exact integer planar primitives and the validated ``PointSet``
"""

from enum import IntEnum
from functools import cached_property
from itertools import combinations
from typing import List, NamedTuple, Sequence, Tuple

from .utils import COORD_LIMIT, InstanceError, edge_pairs, mask_of


class GeometryError(InstanceError):
    pass


class DuplicatePoint(GeometryError):
    def __init__(self, i: int, j: int) -> None:
        self.indices = (i, j)
        super().__init__(f"Points {i} and {j} coincide.")


class CollinearTriple(GeometryError):
    def __init__(self, i: int, j: int, k: int) -> None:
        self.indices = (i, j, k)
        super().__init__(f"Points {i}, {j} and {k} are collinear.")


class TooFewPoints(GeometryError):
    def __init__(self, n: int) -> None:
        self.n = n
        super().__init__(f"At least 3 points are required, got {n}.")


class CoordinateOverflow(GeometryError):
    def __init__(self, i: int) -> None:
        self.index = i
        super().__init__(
            f"Point {i} has a coordinate outside [-{COORD_LIMIT}, {COORD_LIMIT}]."
        )


class ApexCoincides(GeometryError):
    pass


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTER_CLOCKWISE = 1


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Point(NamedTuple):
    x: int
    y: int


def _cross(p: Point, q: Point, r: Point) -> int:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """
        Orientation of the triple ``(p, q, r)``

        Sign of the determinant ``(q - p) x (r - p)``, computed exactly.

        Examples
        --------
        >>> orientation(Point(0, 0), Point(1, 0), Point(0, 1))
        <Orientation.COUNTER_CLOCKWISE: 1>
    """
    return Orientation(_sign(_cross(p, q, r)))


def segments_cross(e: Tuple[Point, Point], f: Tuple[Point, Point]) -> bool:
    """
        True iff the open segments ``e`` and ``f`` properly intersect

        Segments sharing an endpoint never cross. Inputs are assumed to be
        in general position, so touching and overlapping cases do not arise.
    """
    a, b = e
    c, d = f
    if a == c or a == d or b == c or b == d:
        return False
    o1 = _sign(_cross(a, b, c))
    o2 = _sign(_cross(a, b, d))
    o3 = _sign(_cross(c, d, a))
    o4 = _sign(_cross(c, d, b))
    return o1 * o2 < 0 and o3 * o4 < 0


def angle_compare(
    w: Point, first: Tuple[Point, Point], second: Tuple[Point, Point]
) -> Comparison:
    """
        Compare the convex angles ``u1 w v1`` and ``u2 w v2`` exactly

        Parameters
        ----------
        w: Point
            The common apex.
        first: Tuple[Point, Point]
            The ray endpoints ``(u1, v1)``.
        second: Tuple[Point, Point]
            The ray endpoints ``(u2, v2)``.

        Returns
        -------
        Comparison
            ``GREATER`` when the first angle is the larger one.

        Raises
        ------
        ApexCoincides
            If ``w`` equals one of the ray endpoints.

        Notes
        -----
        Angles are first split into acute, right and obtuse classes by the
        sign of the dot product. Inside a class the squared tangent
        ``cross**2 / dot**2`` orders the angles; the two ratios are compared by
        cross multiplication, so no division or floating point is involved.
        The squared tangent grows with the angle on acute angles and shrinks
        with it on obtuse ones.
    """
    for point in (*first, *second):
        if point[0] == w[0] and point[1] == w[1]:
            raise ApexCoincides(f"Apex {tuple(w)} coincides with a ray endpoint.")

    def terms(pair):
        u, v = pair
        ax, ay = u[0] - w[0], u[1] - w[1]
        bx, by = v[0] - w[0], v[1] - w[1]
        return ax * bx + ay * by, ax * by - ay * bx

    dot1, cross1 = terms(first)
    dot2, cross2 = terms(second)
    # acute < right < obtuse
    class1, class2 = -_sign(dot1), -_sign(dot2)
    if class1 != class2:
        return Comparison(_sign(class1 - class2))
    if class1 == 0:
        return Comparison.EQUAL
    lhs = cross1 * cross1 * dot2 * dot2
    rhs = cross2 * cross2 * dot1 * dot1
    if class1 < 0:
        return Comparison(_sign(lhs - rhs))
    return Comparison(_sign(rhs - lhs))


class PointSet:
    """
        A validated set of integer points in general position

        Parameters
        ----------
        points: Sequence[Point]
            The points, in input order. Use ``build_point_set`` to construct
            a ``PointSet`` from raw coordinates; it performs the validation.
        hull: Sequence[int]
            Indices of the convex hull vertices in counter-clockwise order,
            starting at the lexicographically smallest point.

        Attributes
        ----------
        interior: Tuple[int, ...]
            Indices of the points strictly inside the convex hull.
        edges: List[Tuple[int, int]]
            All ``C(n, 2)`` point pairs, the position being the edge id.
    """

    def __init__(self, points: Sequence[Point], hull: Sequence[int]) -> None:
        self.points = tuple(points)
        self.hull = tuple(hull)
        on_hull = set(self.hull)
        self.interior = tuple(i for i in range(len(self.points)) if i not in on_hull)
        self.edges = edge_pairs(len(self.points))

    def __repr__(self) -> str:
        return f"<PointSet n={self.n} hull={list(self.hull)} interior={list(self.interior)}>"

    def __len__(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def interior_count(self) -> int:
        """ The number of points not on the boundary of the convex hull """
        return len(self.interior)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_ids(self):
        return {pair: index for index, pair in enumerate(self.edges)}

    def edge_id(self, a: int, b: int) -> int:
        return self.edge_ids[(a, b) if a < b else (b, a)]

    def segment(self, edge: int) -> Tuple[Point, Point]:
        a, b = self.edges[edge]
        return self.points[a], self.points[b]

    @cached_property
    def hull_edges(self) -> int:
        """ Bitmask of the edge ids of the hull sides """
        size = len(self.hull)
        return mask_of(
            self.edge_id(self.hull[i], self.hull[(i + 1) % size]) for i in range(size)
        )

    @cached_property
    def crossing_masks(self) -> Tuple[int, ...]:
        """ For every edge id, the bitmask of edges properly crossing it """
        masks = [0] * self.edge_count
        for e, f in combinations(range(self.edge_count), 2):
            if segments_cross(self.segment(e), self.segment(f)):
                masks[e] |= 1 << f
                masks[f] |= 1 << e
        return tuple(masks)

    def side_of_line(self, edge: int, k: int) -> Orientation:
        """ Side of point ``k`` relative to the directed line through ``edge`` """
        p, q = self.segment(edge)
        return orientation(p, q, self.points[k])


def _convex_hull(points: Sequence[Point]) -> List[int]:
    """ Monotone chain; counter-clockwise from the lexicographically smallest point """
    order = sorted(range(len(points)), key=lambda i: points[i])

    def chain(indices):
        kept: List[int] = []
        for i in indices:
            while (
                len(kept) >= 2
                and _cross(points[kept[-2]], points[kept[-1]], points[i]) <= 0
            ):
                kept.pop()
            kept.append(i)
        return kept

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]


def build_point_set(raw: Sequence[Sequence[int]]) -> PointSet:
    """
        Validate raw coordinates and build a ``PointSet``

        Parameters
        ----------
        raw: Sequence[Sequence[int]]
            Integer ``(x, y)`` pairs.

        Returns
        -------
        PointSet

        Raises
        ------
        TypeError
            If a coordinate is not an integer.
        TooFewPoints
            If fewer than 3 points are given.
        CoordinateOverflow
            If a coordinate exceeds ``COORD_LIMIT`` in absolute value.
        DuplicatePoint
            If two points coincide.
        CollinearTriple
            If three points are collinear.

        Examples
        --------
        >>> P = build_point_set([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
        >>> P.hull, P.interior
        ((0, 1, 2, 3), (4,))
    """
    points = []
    for index, pair in enumerate(raw):
        if len(pair) != 2:
            raise ValueError(f"Point {index} does not have two coordinates.")
        for value in pair:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"Coordinates of point {index} must be integers.")
            if abs(value) > COORD_LIMIT:
                raise CoordinateOverflow(index)
        points.append(Point(int(pair[0]), int(pair[1])))
    if len(points) < 3:
        raise TooFewPoints(len(points))
    seen = {}
    for index, point in enumerate(points):
        if point in seen:
            raise DuplicatePoint(seen[point], index)
        seen[point] = index
    for i, j, k in combinations(range(len(points)), 3):
        if _cross(points[i], points[j], points[k]) == 0:
            raise CollinearTriple(i, j, k)
    return PointSet(points, _convex_hull(points))
