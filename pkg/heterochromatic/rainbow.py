"""
    Constructive rainbow witnesses: plane spanning trees with pairwise
    distinct edge colours, and heterochromatic matroid bases
"""

import warnings
from enum import Enum
from typing import Optional, Tuple

from .geometry import PointSet
from .hypergraph import Colouring
from .matroid import (
    GraphSpec,
    MatroidOracle,
    RankTooSmall,
    TauMismatch,
    basis_avoiding,
    fundamental_circuit,
    gamma,
    make_graphic,
    tau_bases,
)
from .plane_trees import (
    NotConvexPosition,
    PlaneTree,
    WrongInteriorCount,
    classify_tree,
    complement_plane_tree,
    enumerate_plane_spanning_trees,
    find_plane_tree_within,
    is_plane_spanning_tree,
)
from .utils import InvariantViolation, binomial2, bits, popcount


class StarSwapFallbackWarning(UserWarning):
    """ No single-edge swap worked for a star and every plane tree was searched """

    pass


class Branch(Enum):
    NOT_A_TREE = "NotATree"
    COMPLEMENT = "Complement"
    CATERPILLAR_SWAP = "CaterpillarSwap"
    STAR_SWAP = "StarSwap"
    FALLBACK = "Fallback"


def _representative_of(colouring: Colouring, representatives: int, element: int) -> int:
    """ The representative sharing the colour of ``element`` """
    same = colouring.classes[colouring[element] - 1] & representatives
    return (same & -same).bit_length() - 1


def rainbow_tree_convex(point_set: PointSet, colouring: Colouring) -> PlaneTree:
    """
        A rainbow plane spanning tree for ``C(n, 2) - n + 2`` colours and
        points in convex position

        Parameters
        ----------
        point_set: PointSet
            Points in convex position.
        colouring: Colouring
            Colours of the edges in lexicographic edge-id order.

        Returns
        -------
        PlaneTree
            Its edges are the smallest edges of their colour classes.

        Raises
        ------
        NotConvexPosition
            If some point lies inside the hull.
        WrongColourCount
            Unless exactly ``C(n, 2) - n + 2`` colours are used.
        ColouringLengthMismatch
            If the colouring does not cover every edge.

        Notes
        -----
        Keep one edge per colour. The discarded edges number ``n - 2``, fewer
        than the ``n`` hull sides every plane spanning tree needs two of, so
        some plane tree avoids them all.
    """
    if point_set.interior_count:
        raise NotConvexPosition(point_set.interior_count)
    colouring.check_length(point_set.edge_count)
    colouring.require_colours(binomial2(point_set.n) - point_set.n + 2)
    tree = find_plane_tree_within(point_set, colouring.representatives())
    if tree is None:
        raise InvariantViolation("No plane tree uses only one edge per colour.")
    return tree


def _search_after_swap(
    point_set: PointSet, representatives: int, x: int, y: int
) -> Optional[PlaneTree]:
    """ A plane tree on ``(X - x) + y``, the complement of ``(S - y) + x`` """
    return find_plane_tree_within(point_set, representatives & ~(1 << x) | 1 << y)


def _swap_is_usable(point_set: PointSet, swapped: int) -> bool:
    if not is_plane_spanning_tree(point_set, swapped):
        return True
    shape = classify_tree(PlaneTree(swapped), point_set)
    return not (shape.is_star or shape.is_geometric_caterpillar)


def _one_interior_search(
    point_set: PointSet, colouring: Colouring
) -> Tuple[PlaneTree, Branch]:
    representatives = colouring.representatives()
    everything = (1 << point_set.edge_count) - 1
    rest = everything & ~representatives

    if not is_plane_spanning_tree(point_set, rest):
        tree = find_plane_tree_within(point_set, representatives)
        if tree is None:
            raise InvariantViolation("The leftover edges block every plane tree.")
        return tree, Branch.NOT_A_TREE

    leftover = PlaneTree(rest)
    shape = classify_tree(leftover, point_set)
    if not (shape.is_star or shape.is_geometric_caterpillar):
        tree = complement_plane_tree(leftover, point_set)
        if tree is None:
            raise InvariantViolation("A tree that is neither star nor geometric caterpillar has no complement.")
        return tree, Branch.COMPLEMENT

    if not shape.is_star:
        degree = [0] * point_set.n
        for e in bits(rest):
            a, b = point_set.edges[e]
            degree[a] += 1
            degree[b] += 1
        y = next(
            e for e in bits(rest)
            if degree[point_set.edges[e][0]] >= 2 and degree[point_set.edges[e][1]] >= 2
        )
        x = _representative_of(colouring, representatives, y)
        tree = _search_after_swap(point_set, representatives, x, y)
        if tree is None:
            raise InvariantViolation(f"Swapping body edge {y} for {x} leaves no plane tree.")
        return tree, Branch.CATERPILLAR_SWAP

    for y in bits(rest):
        x = _representative_of(colouring, representatives, y)
        if not _swap_is_usable(point_set, rest & ~(1 << y) | 1 << x):
            continue
        tree = _search_after_swap(point_set, representatives, x, y)
        if tree is not None:
            return tree, Branch.STAR_SWAP

    warnings.warn(
        "No edge swap produced a complement tree; enumerating all plane trees.",
        StarSwapFallbackWarning,
    )
    for tree in enumerate_plane_spanning_trees(point_set, cap=point_set.n):
        if colouring.is_rainbow(tree.edges):
            return tree, Branch.FALLBACK
    raise InvariantViolation("No rainbow plane spanning tree exists.")


def rainbow_tree_one_interior(point_set: PointSet, colouring: Colouring) -> PlaneTree:
    """
        A rainbow plane spanning tree for ``C(n, 2) - n + 1`` colours and
        exactly one interior point

        Parameters
        ----------
        point_set: PointSet
        colouring: Colouring

        Returns
        -------
        PlaneTree

        Raises
        ------
        WrongInteriorCount
            If the point set does not have exactly one interior point.
        WrongColourCount
            Unless exactly ``C(n, 2) - n + 1`` colours are used.

        Notes
        -----
        Let ``X`` be the smallest edge of every colour and ``S`` the
        ``n - 1`` remaining edges. If ``S`` is not a plane tree, a plane tree
        inside ``X`` exists. If ``S`` is a plane tree that is neither a star
        nor a geometric caterpillar, its complement tree lies in ``X``. For a
        geometric caterpillar the first body edge ``y`` is swapped with the
        edge ``x`` of ``X`` of the same colour and a tree is searched in
        ``(X - x) + y``. Stars try every edge of ``S`` as ``y``; when no swap
        works every plane tree is searched and ``StarSwapFallbackWarning``
        is issued.
    """
    if point_set.interior_count != 1:
        raise WrongInteriorCount(1, point_set.interior_count)
    colouring.check_length(point_set.edge_count)
    colouring.require_colours(binomial2(point_set.n) - point_set.n + 1)
    tree, _ = _one_interior_search(point_set, colouring)
    if not colouring.is_rainbow(tree.edges):
        raise InvariantViolation(f"Tree {tree.edge_ids()} repeats a colour.")
    return tree


def rainbow_basis(
    matroid: MatroidOracle,
    colouring: Colouring,
    tau: Optional[int] = None,
    verify: bool = False,
) -> int:
    """
        A basis whose elements get pairwise distinct colours

        Parameters
        ----------
        matroid: MatroidOracle
            A matroid of rank at least 2.
        colouring: Colouring
            Uses exactly ``m - tau + 2`` colours.
        tau: int, optional
            Size of a smallest double transversal of the bases. Computed from
            the basis hypergraph when omitted.
        verify: bool, optional
            Recompute ``tau`` even when it is supplied and compare.

        Returns
        -------
        int
            Bitmask of the basis.

        Raises
        ------
        RankTooSmall
            If the rank is below 2.
        WrongColourCount
            If the colour count does not match ``m - tau + 2``.
        TauMismatch
            If ``verify`` is set and the supplied ``tau`` is wrong.

        Notes
        -----
        With ``X`` one element per colour and ``Y`` the rest, ``|Y| = tau - 2``
        so some basis ``R`` meets ``Y`` at most once. If ``R`` repeats a
        colour it holds one ``y`` in ``Y`` and the ``x`` in ``X`` of the same
        colour. A basis ``S`` meeting ``Y + x`` at most once is tried next;
        failing that an element ``z`` of ``S`` outside ``Y + x`` completes
        ``R - x - y``, and the fundamental circuit of ``z`` in ``R`` tells
        whether ``x`` or ``y`` gives way.
    """
    if matroid.rank < 2:
        raise RankTooSmall(matroid.rank)
    colouring.check_length(matroid.ground_size)
    if tau is None:
        tau = tau_bases(matroid)
    elif verify:
        computed = tau_bases(matroid)
        if computed != tau:
            raise TauMismatch(tau, computed)
    colouring.require_colours(matroid.ground_size - tau + 2)

    representatives = colouring.representatives()
    rest = matroid.ground & ~representatives
    first = basis_avoiding(matroid, rest)
    if first is None:
        raise InvariantViolation("The uncoloured remainder is a double transversal.")
    if colouring.is_rainbow(first):
        return first
    if popcount(first & rest) != 1:
        raise InvariantViolation(f"Basis {list(bits(first))} repeats a colour inside X.")
    y = (first & rest).bit_length() - 1
    x = _representative_of(colouring, representatives, y)
    if not first >> x & 1:
        raise InvariantViolation(f"Basis {list(bits(first))} repeats no colour of {y}.")

    avoid = rest | 1 << x
    second = basis_avoiding(matroid, avoid)
    if second is None:
        raise InvariantViolation("The remainder plus one element is a double transversal.")
    if colouring.is_rainbow(second):
        return second

    core = first & ~(1 << x) & ~(1 << y)
    z = next(
        (e for e in bits(second & ~avoid & ~first) if matroid.is_independent(core | 1 << e)),
        None,
    )
    if z is None:
        raise InvariantViolation("No exchange element completes the basis.")
    circuit = fundamental_circuit(matroid, first, z)
    if circuit >> x & 1:
        result = first & ~(1 << x) | 1 << z
    elif circuit >> y & 1:
        result = first & ~(1 << y) | 1 << z
    else:
        raise InvariantViolation(f"Circuit of {z} avoids both {x} and {y}.")
    if not (matroid.is_basis(result) and colouring.is_rainbow(result)):
        raise InvariantViolation(f"Exchange produced {list(bits(result))}.")
    return result


def rainbow_spanning_tree(graph: GraphSpec, colouring: Colouring) -> int:
    """
        A spanning tree of ``graph`` with pairwise distinct colours, for
        colourings with ``m - gamma(graph) + 2`` colours

        Examples
        --------
        >>> from heterochromatic.matroid import complete_graph
        >>> tree = rainbow_spanning_tree(complete_graph(4), Colouring([1, 1, 1, 2, 2, 3]))
        >>> bin(tree).count("1")
        3
    """
    return rainbow_basis(make_graphic(graph), colouring, tau=gamma(graph))
