"""
    Minimum double transversal by branch-and-bound
"""

from typing import List, Optional, Tuple
from warnings import warn

from ..hypergraph import DoubleTransversal, Hypergraph
from ..utils import TAU_CAP, SearchBudgetWarning, TooLarge, popcount


class _BudgetExhausted(Exception):
    pass


def _greedy_transversal(edges: List[int], nu: int) -> int:
    """ Repeatedly add the vertex lying in the most deficient hyperedges """
    chosen = 0
    while True:
        deficient = [edge for edge in edges if popcount(edge & chosen) < 2]
        if not deficient:
            return chosen
        best_vertex, best_score = -1, -1
        for vertex in range(nu):
            if chosen >> vertex & 1:
                continue
            score = sum(edge >> vertex & 1 for edge in deficient)
            if score > best_score:
                best_vertex, best_score = vertex, score
        chosen |= 1 << best_vertex


def double_transversal_search(
    hypergraph: Hypergraph, budget: Optional[int] = None
) -> Tuple[int, bool]:
    """
        Branch-and-bound over vertex inclusion

        Parameters
        ----------
        hypergraph: Hypergraph
            Supersets are removed internally through ``minimal_view``.
        budget: int, optional
            Maximum number of search nodes. ``None`` means unlimited.

        Returns
        -------
        best: int
            Bitmask of the smallest double transversal found.
        exact: bool
            ``False`` when the budget ran out before optimality was proven.

        Notes
        -----
        Each node picks the most deficient hyperedge (the one missing most
        transversal vertices, ties broken by fewest available vertices and
        then by hyperedge order) and branches on its lowest available vertex:
        first include it, then exclude it for the rest of the subtree. A node
        is pruned when ``|T|`` plus the largest deficiency reaches the
        incumbent, or when some hyperedge has fewer available vertices than
        it still needs.
    """
    edges = list(hypergraph.minimal_view())
    nu = hypergraph.nu
    best = [_greedy_transversal(edges, nu)]
    best_size = [popcount(best[0])]
    nodes = [0]

    def search(chosen: int, excluded: int) -> None:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _BudgetExhausted
        worst_deficit, worst_free = 0, 0
        for edge in edges:
            deficit = 2 - popcount(edge & chosen)
            if deficit <= 0:
                continue
            free = edge & ~chosen & ~excluded
            free_count = popcount(free)
            if free_count < deficit:
                return
            if deficit > worst_deficit or (
                deficit == worst_deficit and free_count < popcount(worst_free)
            ):
                worst_deficit, worst_free = deficit, free
        size = popcount(chosen)
        if worst_deficit == 0:
            if size < best_size[0]:
                best[0], best_size[0] = chosen, size
            return
        if size + worst_deficit >= best_size[0]:
            return
        vertex = worst_free & -worst_free
        search(chosen | vertex, excluded)
        search(chosen, excluded | vertex)

    try:
        search(0, 0)
    except _BudgetExhausted:
        return best[0], False
    return best[0], True


def min_double_transversal(
    hypergraph: Hypergraph, cap: int = TAU_CAP, budget: Optional[int] = None
) -> Tuple[DoubleTransversal, int]:
    """
        A minimum double transversal and its size ``tau``

        Parameters
        ----------
        hypergraph: Hypergraph
        cap: int, optional
            Largest accepted number of vertices. Defaults to ``TAU_CAP``.
        budget: int, optional
            Node budget; when it runs out the best transversal found so far is
            returned and a ``SearchBudgetWarning`` is issued.

        Returns
        -------
        transversal: DoubleTransversal
        tau: int

        Raises
        ------
        TooLarge
            If ``hypergraph.nu`` exceeds ``cap``.

        Examples
        --------
        >>> H = Hypergraph(4, [{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}])
        >>> min_double_transversal(H)[1]
        4
    """
    if hypergraph.nu > cap:
        raise TooLarge("nu", hypergraph.nu, cap)
    mask, exact = double_transversal_search(hypergraph, budget)
    if not exact:
        warn(
            f"Double transversal search stopped after {budget} nodes; "
            "the reported size is an upper bound.",
            SearchBudgetWarning,
        )
    transversal = DoubleTransversal(mask)
    return transversal, transversal.size
