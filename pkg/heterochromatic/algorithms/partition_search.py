"""
    Exact heterochromatic number by searching vertex partitions
"""

from itertools import combinations
from typing import List, Tuple

from ..hypergraph import Hypergraph
from ..utils import HC_CAP, TooLarge, bits


def _canonical(labels: Tuple[int, ...]) -> Tuple[int, ...]:
    """ Relabel blocks in order of first appearance """
    names = {}
    return tuple(names.setdefault(label, len(names)) for label in labels)


def _merge(labels: Tuple[int, ...], a: int, b: int) -> Tuple[int, ...]:
    return _canonical(tuple(a if label == b else label for label in labels))


def max_rainbow_free_partition(
    hypergraph: Hypergraph, cap: int = HC_CAP
) -> Tuple[int, Tuple[int, ...]]:
    """
        The largest number of colours that admits a colouring without a
        rainbow hyperedge

        Parameters
        ----------
        hypergraph: Hypergraph
        cap: int, optional
            Largest accepted number of vertices. Defaults to ``HC_CAP``.

        Returns
        -------
        k: int
            The maximum number of colour classes.
        partition: Tuple[int, ...]
            A witness as a restricted growth string: vertex ``v`` gets colour
            ``partition[v] + 1``.

        Raises
        ------
        TooLarge
            If ``hypergraph.nu`` exceeds ``cap``.

        Notes
        -----
        A colouring has no rainbow hyperedge iff every hyperedge has two
        vertices of the same colour. Starting from the discrete partition, the
        search repeatedly picks an unsatisfied hyperedge (all of its vertices in
        distinct blocks; the smallest such hyperedge first) and branches over
        the pairs of its blocks to merge. The cost of a partition is
        ``nu - blocks``; it is minimised. Unsatisfied hyperedges touching
        pairwise disjoint sets of blocks need one merge each, which gives an
        admissible lower bound. Canonical partitions are memoised.
    """
    nu = hypergraph.nu
    if nu > cap:
        raise TooLarge("nu", nu, cap)
    edges: List[List[int]] = [list(bits(edge)) for edge in hypergraph]
    best_cost = [nu - 1]
    best_labels = [tuple([0] * nu)]
    seen = set()

    def search(labels: Tuple[int, ...]) -> None:
        if labels in seen:
            return
        seen.add(labels)
        cost = nu - (max(labels) + 1)
        unsatisfied = []
        for edge in edges:
            touched = {labels[v] for v in edge}
            if len(touched) == len(edge):
                unsatisfied.append(touched)
        if not unsatisfied:
            if cost < best_cost[0]:
                best_cost[0], best_labels[0] = cost, labels
            return
        used = set()
        packing = 0
        for touched in unsatisfied:
            if used.isdisjoint(touched):
                used |= touched
                packing += 1
        if cost + packing >= best_cost[0]:
            return
        target = min(unsatisfied, key=len)
        for a, b in combinations(sorted(target), 2):
            search(_merge(labels, a, b))

    search(tuple(range(nu)))
    return nu - best_cost[0], best_labels[0]


def heterochromatic_number_exact(hypergraph: Hypergraph, cap: int = HC_CAP) -> int:
    """
        Smallest ``k`` such that every ``k``-colouring has a rainbow hyperedge

        Examples
        --------
        >>> heterochromatic_number_exact(Hypergraph(3, [{0, 1}, {0, 2}, {1, 2}]))
        2
    """
    k, _ = max_rainbow_free_partition(hypergraph, cap)
    return k + 1
