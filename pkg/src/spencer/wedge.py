"""
Wedge labels delta~_{i_1} ^ ... ^ delta~_{i_l}, written as strictly increasing tuples.
"""

from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from src.algebra.errors import InputError

WedgeIndex = Tuple[int, ...]


def wedge_index(indices: Iterable[int]) -> WedgeIndex:
    """Validate a strictly increasing tuple of labels >= 1."""
    idx = tuple(indices)
    if any(i < 1 for i in idx):
        raise InputError(f"wedge labels start at 1, got {idx}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise InputError(f"wedge labels must be strictly increasing, got {idx}")
    return idx


def wedge_basis(n: int, size: int) -> List[WedgeIndex]:
    """All wedge labels of the given size from {1..n}, in lexicographic order."""
    if size < 0 or size > n:
        return []
    return list(combinations(range(1, n + 1), size))


def insert_sorted(label: int, rest: WedgeIndex) -> Tuple[int, Optional[WedgeIndex]]:
    """
    Move delta~_label ^ rest into increasing order.

    Returns:
        (sign, index); (0, None) when label already occurs in rest
    """
    if label in rest:
        return 0, None
    below = sum(1 for r in rest if r < label)
    sign = -1 if below % 2 else 1
    return sign, tuple(sorted(rest + (label,)))


def format_wedge(index: WedgeIndex) -> str:
    """Report key for a wedge label: "1,3", or "-" for the empty wedge."""
    return ",".join(str(i) for i in index) if index else "-"


def parse_wedge(key: str) -> WedgeIndex:
    if key == "-":
        return ()
    try:
        return wedge_index(int(p) for p in key.split(","))
    except ValueError:
        raise InputError(f"invalid wedge key {key!r}")
