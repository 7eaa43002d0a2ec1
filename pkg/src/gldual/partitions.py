"""Integer partitions, multipartitions and symmetric-group class data.

Partitions are weakly decreasing tuples of positive integers.  The canonical
enumeration order used everywhere in this package is plain lexicographic
order on those tuples, e.g. for n = 3: (1,1,1) < (2,1) < (3).
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of n in canonical (lexicographic) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(1, max_part + 1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def multipartitions(sizes: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield one partition per entry of `sizes`, lexicographic with the first entry major."""
    yield from itertools.product(*(tuple(partitions(n)) for n in sizes))


def part_multiplicities(partition: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """(part, multiplicity) pairs of a partition, parts in decreasing order."""
    out = []
    for part, run in itertools.groupby(partition):
        out.append((part, sum(1 for _ in run)))
    return tuple(out)


def centralizer_order(partition: tuple[int, ...]) -> int:
    """Order of the S_n-centralizer of a permutation with this cycle type.

    Equals prod(part^mult * mult!) over distinct parts; the conjugacy class of
    the cycle type has n!/centralizer_order elements.
    """
    z = 1
    for part, mult in part_multiplicities(partition):
        z *= part**mult * math.factorial(mult)
    return z
