"""
    Hypergraphs, colourings and double transversals
"""

from collections.abc import Collection
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Union

from .utils import InstanceError, bits, mask_of, popcount, set_partitions


class HypergraphError(InstanceError):
    pass


class EmptyHypergraph(HypergraphError):
    pass


class LoopHyperedge(HypergraphError):
    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Hyperedge {index} has fewer than two vertices.")


class VertexOutOfRange(HypergraphError):
    def __init__(self, index: int, vertex: int) -> None:
        self.index = index
        self.vertex = vertex
        super().__init__(f"Hyperedge {index} references vertex {vertex}.")


class NotADoubleTransversal(HypergraphError):
    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"Hyperedge {index} meets the set in fewer than two vertices.")


class ColouringError(InstanceError):
    pass


class NotSurjective(ColouringError):
    def __init__(self, missing: Sequence[int]) -> None:
        self.missing = tuple(missing)
        super().__init__(f"Colours {list(self.missing)} are never used.")


class WrongColourCount(ColouringError):
    def __init__(self, expected: int, got: int) -> None:
        self.expected = expected
        self.got = got
        super().__init__(f"Expected exactly {expected} colours, got {got}.")


class ColouringLengthMismatch(ColouringError):
    def __init__(self, expected: int, got: int) -> None:
        self.expected = expected
        self.got = got
        super().__init__(f"Colouring covers {got} vertices, expected {expected}.")


class Hypergraph(Collection):
    """
        A loopless hypergraph on the vertices ``0 .. nu - 1``

        Parameters
        ----------
        nu: int
            The number of vertices.
        hyperedges: Iterable[Union[int, Iterable[int]]]
            Each hyperedge is either a bitmask or an iterable of vertices.
            Duplicates are dropped, keeping the first occurrence.

        Raises
        ------
        EmptyHypergraph
            If no hyperedge is given.
        LoopHyperedge
            If a hyperedge has fewer than two vertices.
        VertexOutOfRange
            If a hyperedge references a vertex outside ``0 .. nu - 1``.

        Notes
        -----
        A hyperedge that is a superset of another one is kept: it matters
        for rainbow detection. ``minimal_view`` drops such hyperedges for the
        double transversal computation, where they are redundant.
    """

    def __init__(self, nu: int, hyperedges: Iterable[Union[int, Iterable[int]]]) -> None:
        self.nu = nu
        edges: List[int] = []
        seen = set()
        for index, edge in enumerate(hyperedges):
            mask = edge if isinstance(edge, int) else mask_of(edge)
            if mask >> nu or mask < 0:
                raise VertexOutOfRange(index, max(bits(mask)) if mask > 0 else -1)
            if popcount(mask) < 2:
                raise LoopHyperedge(index)
            if mask not in seen:
                seen.add(mask)
                edges.append(mask)
        if not edges:
            raise EmptyHypergraph("A hypergraph needs at least one hyperedge.")
        self.edges = tuple(edges)

    def __repr__(self) -> str:
        return f"<Hypergraph nu={self.nu} hyperedges={len(self)}>"

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    def __contains__(self, mask) -> bool:
        return mask in self.edges

    def __getitem__(self, index: int) -> int:
        return self.edges[index]

    def minimal_view(self) -> "Hypergraph":
        """ The hyperedges that contain no other hyperedge """
        ordered = sorted(self.edges, key=popcount)
        kept: List[int] = []
        for edge in ordered:
            if not any(other & edge == other for other in kept):
                kept.append(edge)
        kept_set = set(kept)
        return Hypergraph(self.nu, [edge for edge in self.edges if edge in kept_set])

    def to_dict(self) -> Dict:
        return {"nu": self.nu, "edges": [list(bits(edge)) for edge in self.edges]}

    @classmethod
    def from_dict(cls, document: Dict) -> "Hypergraph":
        return cls(document["nu"], document["edges"])


class Colouring:
    """
        A surjective colouring of the vertices ``0 .. nu - 1`` by ``1 .. k``

        Parameters
        ----------
        assignment: Sequence[int]
            ``assignment[v]`` is the colour of vertex ``v``.

        Raises
        ------
        ValueError
            If a colour is not a positive integer.
        NotSurjective
            If some colour in ``1 .. max(assignment)`` is unused.
    """

    def __init__(self, assignment: Sequence[int]) -> None:
        colours = tuple(int(c) for c in assignment)
        if any(c < 1 for c in colours):
            raise ValueError("Colours must be positive integers.")
        self.assignment = colours
        self.k = max(colours) if colours else 0
        missing = sorted(set(range(1, self.k + 1)) - set(colours))
        if missing:
            raise NotSurjective(missing)
        classes = [0] * (self.k + 1)
        for vertex, colour in enumerate(colours):
            classes[colour] |= 1 << vertex
        self.classes = tuple(classes[1:])

    def __repr__(self) -> str:
        return f"<Colouring nu={len(self)} k={self.k}>"

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, vertex: int) -> int:
        return self.assignment[vertex]

    def __eq__(self, other) -> bool:
        return isinstance(other, Colouring) and self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.assignment)

    def representatives(self) -> int:
        """ Bitmask of the smallest vertex of every colour class """
        mask = 0
        for colour_class in self.classes:
            mask |= colour_class & -colour_class
        return mask

    def is_rainbow(self, mask: int) -> bool:
        """ True iff the vertices in ``mask`` have pairwise distinct colours """
        return all(popcount(mask & colour_class) <= 1 for colour_class in self.classes)

    def check_length(self, nu: int) -> None:
        if len(self) != nu:
            raise ColouringLengthMismatch(nu, len(self))

    def require_colours(self, k: int) -> None:
        if self.k != k:
            raise WrongColourCount(k, self.k)


class DoubleTransversal(NamedTuple):
    vertices: int

    @property
    def size(self) -> int:
        return popcount(self.vertices)

    def as_list(self) -> List[int]:
        return list(bits(self.vertices))


def is_double_transversal(hypergraph: Hypergraph, vertices: int) -> bool:
    return all(popcount(edge & vertices) >= 2 for edge in hypergraph)


def has_rainbow_hyperedge(hypergraph: Hypergraph, colouring: Colouring) -> Optional[int]:
    """
        Index of the first hyperedge whose vertices get pairwise distinct colours

        Returns
        -------
        Optional[int]
            ``None`` when every hyperedge repeats a colour.
    """
    colouring.check_length(hypergraph.nu)
    for index, edge in enumerate(hypergraph):
        if colouring.is_rainbow(edge):
            return index
    return None


def lower_bound_colouring(hypergraph: Hypergraph, transversal: DoubleTransversal) -> Colouring:
    """
        Colour the double transversal with colour 1 and every other vertex
        with its own colour

        The result uses ``nu - |T| + 1`` colours and has no rainbow hyperedge,
        since every hyperedge meets ``T`` twice. It certifies
        ``h_c >= nu - |T| + 2``.

        Raises
        ------
        NotADoubleTransversal
            If some hyperedge meets ``T`` in fewer than two vertices.
    """
    for index, edge in enumerate(hypergraph):
        if popcount(edge & transversal.vertices) < 2:
            raise NotADoubleTransversal(index)
    assignment = []
    next_colour = 2
    for vertex in range(hypergraph.nu):
        if transversal.vertices >> vertex & 1:
            assignment.append(1)
        else:
            assignment.append(next_colour)
            next_colour += 1
    return Colouring(assignment)


def canonical_colourings(nu: int, k: int) -> Iterator[Colouring]:
    """ Every surjective ``k``-colouring of ``nu`` vertices up to renaming colours """
    for string in set_partitions(nu, blocks=k):
        yield Colouring([label + 1 for label in string])
