"""
    Constants, bitset helpers and exceptions shared by every module
"""

from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Tuple

# Coordinates are bounded so that every orientation and angle determinant
# stays within 128-bit intermediates.
COORD_LIMIT = 2 ** 20

ENUMERATION_CAP = 9
HC_CAP = 12
TAU_CAP = 16
BASIS_CAP = 20
GAMMA_CAP = 12
AXIOM_CAP = 10


class InstanceError(Exception):
    """ Base class for every rejected input """

    pass


class TooLarge(InstanceError):
    def __init__(self, what: str, size: int, cap: int) -> None:
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} = {size} exceeds the cap of {cap}")


class InvariantViolation(RuntimeError):
    """
        Raised when a guarantee that a theorem provides does not hold at
        runtime. This always points at an implementation bug.
    """

    pass


class SearchBudgetWarning(UserWarning):
    pass


def mask_of(indices: Iterable[int]) -> int:
    """ Bitmask with the given indices set """
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def bits(mask: int) -> Iterator[int]:
    """ Iterate over the set indices of ``mask`` in increasing order """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def edge_pairs(n: int) -> List[Tuple[int, int]]:
    """
        All unordered pairs of ``range(n)`` in lexicographic order.

        The position of a pair in this list is its edge id.
    """
    return list(combinations(range(n), 2))


def binomial2(n: int) -> int:
    return n * (n - 1) // 2


def set_partitions(n: int, blocks: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
        Enumerate the set partitions of ``range(n)`` as restricted growth strings

        Parameters
        ----------
        n: int
            Number of elements.
        blocks: int, optional
            If given, only partitions with exactly this many blocks are
            produced.

        Returns
        -------
        Iterator[Tuple[int, ...]]
            Tuples ``a`` with ``a[0] == 0`` and
            ``a[i] <= max(a[:i]) + 1``; ``a[i]`` is the block of element ``i``.

        Examples
        --------
        >>> list(set_partitions(3))
        [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    """
    if n == 0:
        if blocks in (None, 0):
            yield ()
        return
    string = [0] * n

    def extend(position: int, used: int) -> Iterator[Tuple[int, ...]]:
        if blocks is not None and used + (n - position) < blocks:
            return
        if position == n:
            if blocks is None or used == blocks:
                yield tuple(string)
            return
        limit = used + 1 if blocks is None else min(used + 1, blocks)
        for label in range(limit):
            string[position] = label
            yield from extend(position + 1, max(used, label + 1))

    yield from extend(1, 1)
