"""
    Independence-oracle matroids: graphic, uniform and linear
"""

from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from .algorithms.transversal import min_double_transversal
from .hypergraph import Hypergraph
from .utils import (
    AXIOM_CAP,
    BASIS_CAP,
    GAMMA_CAP,
    InstanceError,
    InvariantViolation,
    TooLarge,
    bits,
    popcount,
    set_partitions,
)


class MatroidError(InstanceError):
    pass


class LoopEdge(MatroidError):
    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Edge {index} is a loop.")


class BadParameters(MatroidError):
    pass


class EmptyMatrix(MatroidError):
    pass


class NotABasis(MatroidError):
    pass


class ElementInBasis(MatroidError):
    def __init__(self, element: int) -> None:
        self.element = element
        super().__init__(f"Element {element} already lies in the basis.")


class RankTooSmall(MatroidError):
    def __init__(self, rank: int) -> None:
        self.rank = rank
        super().__init__(f"Rank {rank} is below 2.")


class Disconnected(MatroidError):
    pass


class TooFewVertices(MatroidError):
    pass


class MatroidAxiomError(MatroidError):
    pass


class TauMismatch(MatroidError):
    def __init__(self, supplied: int, computed: int) -> None:
        self.supplied = supplied
        self.computed = computed
        super().__init__(f"Supplied tau = {supplied} but the bases give tau = {computed}.")


class GraphSpec:
    """
        A loopless multigraph on the vertices ``0 .. vertex_count - 1``

        Parameters
        ----------
        vertex_count: int
        edges: Sequence[Tuple[int, int]]
            The position of an edge in this list is its matroid element.

        Raises
        ------
        LoopEdge
            If an edge joins a vertex to itself.
        BadParameters
            If an edge references a missing vertex.
    """

    def __init__(self, vertex_count: int, edges: Sequence[Tuple[int, int]]) -> None:
        self.vertex_count = vertex_count
        self.edges = [tuple(edge) for edge in edges]
        for index, (u, v) in enumerate(self.edges):
            if u == v:
                raise LoopEdge(index)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise BadParameters(f"Edge {index} references a missing vertex.")

    def __repr__(self) -> str:
        return f"<GraphSpec vertices={self.vertex_count} edges={len(self.edges)}>"

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "GraphSpec":
        nodes = sorted(graph.nodes())
        position = {node: index for index, node in enumerate(nodes)}
        edges = sorted(
            tuple(sorted((position[u], position[v]))) for u, v in graph.edges()
        )
        return cls(len(nodes), edges)


def complete_graph(n: int) -> GraphSpec:
    return GraphSpec.from_networkx(nx.complete_graph(n))


def path_graph(n: int) -> GraphSpec:
    return GraphSpec.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> GraphSpec:
    return GraphSpec.from_networkx(nx.cycle_graph(n))


def star_graph(k: int) -> GraphSpec:
    """ The star with ``k`` leaves """
    return GraphSpec.from_networkx(nx.star_graph(k))


def complete_bipartite_graph(a: int, b: int) -> GraphSpec:
    return GraphSpec.from_networkx(nx.complete_bipartite_graph(a, b))


class MatroidOracle:
    """
        A matroid on the ground set ``0 .. ground_size - 1`` given by an
        independence oracle

        Parameters
        ----------
        ground_size: int
            The number of elements ``m``.
        independence: Callable[[int], bool], optional
            Independence test on bitmasks. Subclasses override
            ``_independence`` instead.
        name: str, optional
            Label used in reports.
        verify: bool, optional
            Check the matroid axioms exhaustively at construction. Only
            allowed for ``m <= AXIOM_CAP``. Defaults to ``False``.

        Attributes
        ----------
        rank: int
            The rank ``r`` of the matroid (cached).

        Raises
        ------
        MatroidAxiomError
            If ``verify`` is set and the oracle is not a matroid.
    """

    def __init__(
        self,
        ground_size: int,
        independence: Optional[Callable[[int], bool]] = None,
        name: str = "matroid",
        verify: bool = False,
    ) -> None:
        self.ground_size = ground_size
        self.name = name
        self._oracle = independence
        self._cache: Dict[int, bool] = {}
        if verify:
            check_axioms(self)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} m={self.ground_size} r={self.rank}>"

    def _independence(self, mask: int) -> bool:
        if self._oracle is None:
            raise NotImplementedError("No independence oracle supplied")
        return bool(self._oracle(mask))

    def is_independent(self, mask: int) -> bool:
        if mask not in self._cache:
            self._cache[mask] = self._independence(mask)
        return self._cache[mask]

    def rank_of(self, mask: int) -> int:
        """ Size of a maximal independent subset of ``mask``, built greedily """
        chosen = 0
        for e in bits(mask):
            if self.is_independent(chosen | 1 << e):
                chosen |= 1 << e
        return popcount(chosen)

    @cached_property
    def rank(self) -> int:
        return self.rank_of((1 << self.ground_size) - 1)

    @property
    def ground(self) -> int:
        return (1 << self.ground_size) - 1

    def is_basis(self, mask: int) -> bool:
        return popcount(mask) == self.rank and self.is_independent(mask)


class GraphicMatroid(MatroidOracle):
    """ Cycle matroid of a graph: the independent sets are the forests """

    def __init__(self, graph: GraphSpec, name: str = "graphic", verify: bool = False) -> None:
        self.graph = graph
        super().__init__(len(graph.edges), name=name, verify=verify)

    def _independence(self, mask: int) -> bool:
        forest = UnionFind(range(self.graph.vertex_count))
        for e in bits(mask):
            u, v = self.graph.edges[e]
            if forest[u] == forest[v]:
                return False
            forest.union(u, v)
        return True

    @cached_property
    def rank(self) -> int:
        graph = self.graph.to_networkx()
        return self.graph.vertex_count - nx.number_connected_components(graph)


class UniformMatroid(MatroidOracle):
    def __init__(self, r: int, m: int, verify: bool = False) -> None:
        self.r = r
        super().__init__(m, name=f"U_{r}_{m}", verify=verify)

    def _independence(self, mask: int) -> bool:
        return popcount(mask) <= self.r


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, isqrt(p) + 1))


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """ Rank over GF(p) by Gaussian elimination on an integer array """
    reduced = np.array(matrix, dtype=np.int64) % p
    rows, cols = reduced.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.nonzero(reduced[rank:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + nonzero[0]
        if pivot != rank:
            reduced[[rank, pivot]] = reduced[[pivot, rank]]
        inverse = pow(int(reduced[rank, col]), -1, p)
        reduced[rank] = reduced[rank] * inverse % p
        for row in range(rows):
            if row != rank and reduced[row, col]:
                reduced[row] = (reduced[row] - reduced[row, col] * reduced[rank]) % p
        rank += 1
    return rank


def _rank_rational(matrix: List[List[Fraction]]) -> int:
    """ Rank over the rationals by fraction-exact row reduction """
    reduced = [row[:] for row in matrix]
    rows = len(reduced)
    cols = len(reduced[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if reduced[r][col] != 0), None)
        if pivot is None:
            continue
        reduced[rank], reduced[pivot] = reduced[pivot], reduced[rank]
        lead = reduced[rank][col]
        for r in range(rank + 1, rows):
            factor = reduced[r][col] / lead
            if factor:
                for c in range(col, cols):
                    reduced[r][c] -= factor * reduced[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


def parse_field(field: Union[str, int]) -> Optional[int]:
    """
        ``"rational"`` maps to ``None``; ``"gf(p)"`` or an integer ``p`` maps
        to the prime ``p``
    """
    if isinstance(field, int):
        p = field
    elif field == "rational":
        return None
    elif isinstance(field, str) and field.lower().startswith("gf(") and field.endswith(")"):
        try:
            p = int(field[3:-1])
        except ValueError:
            raise BadParameters(f"Unrecognised field {field!r}")
    else:
        raise BadParameters(f"Unrecognised field {field!r}")
    if not _is_prime(p):
        raise BadParameters(f"{p} is not a prime")
    return p


class LinearMatroid(MatroidOracle):
    """
        Column matroid of a matrix over GF(p) or the rationals

        Parameters
        ----------
        columns: Sequence[Sequence]
            The columns of the matrix; each is a matroid element.
        field: str or int, optional
            ``"rational"`` (default), ``"gf(p)"`` or a prime ``p``.
    """

    def __init__(
        self, columns: Sequence[Sequence], field: Union[str, int] = "rational", verify: bool = False
    ) -> None:
        if not columns or not columns[0]:
            raise EmptyMatrix("The matrix has no entries.")
        height = len(columns[0])
        if any(len(column) != height for column in columns):
            raise BadParameters("Columns have different lengths.")
        if len(columns) < 2:
            raise BadParameters("At least two columns are required.")
        self.field = parse_field(field)
        self.columns = [list(column) for column in columns]
        label = "rational" if self.field is None else f"gf({self.field})"
        super().__init__(len(columns), name=f"linear/{label}", verify=verify)

    def _independence(self, mask: int) -> bool:
        selected = [self.columns[e] for e in bits(mask)]
        if not selected:
            return True
        if len(selected) > len(self.columns[0]):
            return False
        # rows of the transposed selection; rank is invariant under transpose
        if self.field is None:
            matrix = [[Fraction(value) for value in column] for column in selected]
            return _rank_rational(matrix) == len(selected)
        return _rank_mod_p(np.array(selected, dtype=np.int64), self.field) == len(selected)


def make_graphic(graph: GraphSpec, verify: bool = False) -> GraphicMatroid:
    """
        The cycle matroid of ``graph``

        Examples
        --------
        >>> make_graphic(complete_graph(4)).rank
        3
    """
    return GraphicMatroid(graph, verify=verify)


def make_uniform(r: int, m: int, verify: bool = False) -> UniformMatroid:
    """
        The uniform matroid ``U_{r,m}``

        Raises
        ------
        BadParameters
            Unless ``2 <= r <= m``.
    """
    if not (isinstance(r, int) and isinstance(m, int)) or not 2 <= r <= m:
        raise BadParameters(f"U_{{{r},{m}}} needs 2 <= r <= m.")
    return UniformMatroid(r, m, verify=verify)


def make_linear(
    columns: Sequence[Sequence], field: Union[str, int] = "rational", verify: bool = False
) -> LinearMatroid:
    return LinearMatroid(columns, field, verify=verify)


def check_axioms(matroid: MatroidOracle, cap: int = AXIOM_CAP) -> None:
    """
        Exhaustively check the independence axioms

        Raises
        ------
        TooLarge
            If the ground set exceeds ``cap``.
        MatroidAxiomError
            On the first violated axiom.
    """
    m = matroid.ground_size
    if m > cap:
        raise TooLarge("m", m, cap)
    if not matroid.is_independent(0):
        raise MatroidAxiomError("The empty set is dependent.")
    independent = [mask for mask in range(1 << m) if matroid.is_independent(mask)]
    independent_set = set(independent)
    for mask in independent:
        for e in bits(mask):
            if mask ^ (1 << e) not in independent_set:
                raise MatroidAxiomError(f"Hereditary axiom fails below {list(bits(mask))}.")
    by_size: Dict[int, List[int]] = {}
    for mask in independent:
        by_size.setdefault(popcount(mask), []).append(mask)
    for size, smaller in by_size.items():
        for small in smaller:
            for large in by_size.get(size + 1, []):
                if not any((small | 1 << e) in independent_set for e in bits(large & ~small)):
                    raise MatroidAxiomError(
                        f"Exchange fails for {list(bits(small))} and {list(bits(large))}."
                    )


def enumerate_bases(matroid: MatroidOracle, cap: int = BASIS_CAP) -> List[int]:
    """ All bases as bitmasks, in lexicographic order of their sorted elements """
    m = matroid.ground_size
    if m > cap:
        raise TooLarge("m", m, cap)
    r = matroid.rank
    bases: List[int] = []

    def extend(start: int, chosen: int, size: int) -> None:
        if size == r:
            bases.append(chosen)
            return
        for e in range(start, m - (r - size) + 1):
            candidate = chosen | 1 << e
            if matroid.is_independent(candidate):
                extend(e + 1, candidate, size + 1)

    extend(0, 0, 0)
    return bases


def basis_hypergraph(matroid: MatroidOracle, cap: int = BASIS_CAP) -> Hypergraph:
    """
        Vertices are the elements, hyperedges the bases

        Raises
        ------
        RankTooSmall
            If the rank is below 2, since bases would not be proper hyperedges.
    """
    if matroid.rank < 2:
        raise RankTooSmall(matroid.rank)
    return Hypergraph(matroid.ground_size, enumerate_bases(matroid, cap))


def fundamental_circuit(matroid: MatroidOracle, basis: int, element: int) -> int:
    """
        The unique circuit contained in ``basis + element``

        Returns
        -------
        int
            Bitmask of ``element`` together with every basis element ``b`` such
            that ``basis - b + element`` is a basis.

        Raises
        ------
        NotABasis
            If ``basis`` is not a basis.
        ElementInBasis
            If ``element`` already lies in ``basis``.
    """
    if not matroid.is_basis(basis):
        raise NotABasis(f"{list(bits(basis))} is not a basis.")
    if basis >> element & 1:
        raise ElementInBasis(element)
    circuit = 1 << element
    for b in bits(basis):
        if matroid.is_independent(basis ^ (1 << b) | 1 << element):
            circuit |= 1 << b
    if matroid.is_independent(circuit) or any(
        not matroid.is_independent(circuit ^ (1 << e)) for e in bits(circuit)
    ):
        raise InvariantViolation(f"{list(bits(circuit))} is not a circuit.")
    return circuit


def basis_avoiding(matroid: MatroidOracle, avoid: int) -> Optional[int]:
    """
        A basis meeting ``avoid`` in at most one element, or ``None``

        A maximal independent subset of the complement of ``avoid`` is built
        greedily in element order; it is then completed with the first
        element of ``avoid`` that keeps it independent. ``None`` means that
        ``avoid`` is a double transversal of the bases.
    """
    outside = matroid.ground & ~avoid
    chosen = 0
    for e in bits(outside):
        if matroid.is_independent(chosen | 1 << e):
            chosen |= 1 << e
    missing = matroid.rank - popcount(chosen)
    if missing == 0:
        return chosen
    if missing > 1:
        return None
    for z in bits(avoid):
        if matroid.is_independent(chosen | 1 << z):
            return chosen | 1 << z
    raise InvariantViolation("The ground set does not span the matroid.")


def tau_bases(matroid: MatroidOracle, cap: int = BASIS_CAP) -> int:
    """
        Size of a smallest set meeting every basis in at least two elements

        Examples
        --------
        >>> tau_bases(make_uniform(2, 4))
        4
    """
    if matroid.ground_size > cap:
        raise TooLarge("m", matroid.ground_size, cap)
    _, tau = min_double_transversal(basis_hypergraph(matroid, cap), cap=cap)
    return tau


def gamma(graph: GraphSpec, cap: int = GAMMA_CAP) -> int:
    """
        Fewest edges whose removal leaves at least three components

        Every partition of the vertices into three non-empty parts is tried
        and the edges between parts are counted.

        Raises
        ------
        TooFewVertices
            With fewer than three vertices.
        Disconnected
            If the graph is not connected.
        TooLarge
            Above ``cap`` vertices.
    """
    n = graph.vertex_count
    if n < 3:
        raise TooFewVertices(f"gamma needs at least 3 vertices, got {n}.")
    if not graph.is_connected():
        raise Disconnected("gamma is defined for connected graphs.")
    if n > cap:
        raise TooLarge("vertices", n, cap)
    return min(
        sum(labels[u] != labels[v] for u, v in graph.edges)
        for labels in set_partitions(n, blocks=3)
    )
