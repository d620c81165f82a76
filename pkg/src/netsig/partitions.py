"""Ordered set partitions of {1,..,n}: counting, enumeration, uniform sampling.

An ordered set partition is a sequence of disjoint nonempty blocks covering
{1,..,n}; a block models the set of components failing at one shock.  The
total number of ordered set partitions is

    n* = sum_{j=1..n} sum_{k=0..j} C(j,k) (-1)^k (j-k)^n

(the inner sum counts surjections onto j blocks).  Blocks are represented as
sorted tuples of link ids, a partition as a tuple of blocks.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import comb
from typing import Iterator

__all__ = [
    "EXACT_ENUMERATION_LIMIT",
    "EnumerationLimitError",
    "OrderedPartition",
    "count_ordered_partitions",
    "enumerate_ordered_partitions",
    "sample_ordered_partition",
]

OrderedPartition = tuple[tuple[int, ...], ...]

# Above this size exact enumeration runs into the hundreds of millions of
# partitions; callers should switch to sampling.
EXACT_ENUMERATION_LIMIT = 10


class EnumerationLimitError(ValueError):
    """Raised when an exact enumeration would exceed the configured limit."""


@lru_cache(maxsize=None)
def count_ordered_partitions(n: int) -> int:
    """Exact number of ordered set partitions of an n-set (n >= 1).

    Evaluated by inclusion-exclusion over the number of blocks j:
    sum_j sum_k C(j,k) (-1)^k (j-k)^n, all in arbitrary-precision integers.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 0
    for j in range(1, n + 1):
        for k in range(j + 1):
            total += comb(j, k) * (-1) ** k * (j - k) ** n
    return total


def _count0(n: int) -> int:
    # count with the empty-set convention n*(0) = 1, used for sampler weights
    return 1 if n == 0 else count_ordered_partitions(n)


def _lex_subsets(elems: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # nonempty subsets of a sorted tuple, in lexicographic order of the
    # sorted element tuples: (1), (1,2), (1,2,3), (1,3), (2), ...
    n = len(elems)

    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, n):
            sub = prefix + (elems[i],)
            yield sub
            yield from rec(sub, i + 1)

    yield from rec((), 0)


def enumerate_ordered_partitions(
    n: int, limit: int = EXACT_ENUMERATION_LIMIT
) -> Iterator[OrderedPartition]:
    """Stream every ordered set partition of {1,..,n} exactly once.

    Deterministic order: the first block ranges over the nonempty subsets of
    the remaining elements in lexicographic order, recursing on the rest.
    Memory is O(n) per consumer; nothing is materialized.

    Raises :class:`EnumerationLimitError` for n above ``limit`` (default
    ``EXACT_ENUMERATION_LIMIT``); use :func:`sample_ordered_partition` then.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > limit:
        raise EnumerationLimitError(
            f"exact enumeration of n={n} exceeds the limit of {limit} "
            f"({count_ordered_partitions(n)} partitions); use sampling instead"
        )
    yield from _enumerate(tuple(range(1, n + 1)))


def _enumerate(elems: tuple[int, ...]) -> Iterator[OrderedPartition]:
    if not elems:
        yield ()
        return
    for first in _lex_subsets(elems):
        first_set = set(first)
        rest = tuple(e for e in elems if e not in first_set)
        for tail in _enumerate(rest):
            yield (first,) + tail


def sample_ordered_partition(n: int, rng: random.Random) -> OrderedPartition:
    """Draw one ordered set partition, each of the n* being equally likely.

    The first block size k is chosen with probability
    C(n,k) n*(n-k) / n*(n)  (with n*(0) = 1), then a uniform k-subset is
    removed and the remainder is partitioned recursively.  Size selection
    uses an exact integer threshold draw, so every partition has marginal
    probability exactly 1/n*.

    ``rng`` is a seeded :class:`random.Random`; one instance per worker.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    remaining = list(range(1, n + 1))
    blocks: list[tuple[int, ...]] = []
    while remaining:
        m = len(remaining)
        u = rng.randrange(_count0(m))
        acc = 0
        for k in range(1, m + 1):
            acc += comb(m, k) * _count0(m - k)
            if u < acc:
                break
        block = tuple(sorted(rng.sample(remaining, k)))
        blocks.append(block)
        block_set = set(block)
        remaining = [e for e in remaining if e not in block_set]
    return tuple(blocks)
