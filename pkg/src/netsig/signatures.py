"""Signature vectors of two-state networks.

Three exact signature kinds are computed, all as vectors of exact rationals:

* classical -- over the n! orderings without simultaneous failures: entry i
  is the probability that the i-th component failure downs the network;
* tie -- over the n* ordered set partitions (simultaneous failures allowed):
  entry i is the probability that the minimal killing failure count M is i;
* fatal -- over the same n* partitions, with entry i the probability that
  the i-th failure-bearing shock downs the network.

The death number M of a partition is the minimum, over all per-block
orderings consistent with the partition, of the classical failure index:
walk the blocks until the cumulative failed set first becomes a cut, then
add the smallest number of links from that killing block that completes a
cut on top of the earlier failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, sqrt

from .network import Network, is_up, up_table
from .partitions import (
    EXACT_ENUMERATION_LIMIT,
    EnumerationLimitError,
    OrderedPartition,
    count_ordered_partitions,
    enumerate_ordered_partitions,
    sample_ordered_partition,
)

__all__ = [
    "CLASSICAL_ENUMERATION_LIMIT",
    "EstimatedSignature",
    "SignatureVector",
    "TailVector",
    "classical_signature",
    "death_number",
    "fatal_signature",
    "killing_shock_index",
    "t_signature",
    "t_signature_mc",
    "tail",
]

# n! enumeration for the classical signature stays under a second up to here.
CLASSICAL_ENUMERATION_LIMIT = 9


@dataclass(frozen=True)
class SignatureVector:
    """Probability vector over failure indices 1..n, exact rationals.

    ``kind`` is one of ``classical``, ``tie``, ``fatal``.  Entries are
    non-negative and sum to exactly 1.
    """

    kind: str
    probabilities: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("classical", "tie", "fatal"):
            raise ValueError(f"unknown signature kind {self.kind!r}")
        if any(p < 0 for p in self.probabilities):
            raise ValueError("signature entries must be non-negative")
        if sum(self.probabilities) != 1:
            raise ValueError("signature entries must sum to exactly 1")

    @property
    def n(self) -> int:
        return len(self.probabilities)


@dataclass(frozen=True)
class TailVector:
    """Tail sums of a signature: values[j] = P(failure index > j), j = 0..n-1."""

    values: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)


@dataclass(frozen=True)
class EstimatedSignature:
    """Monte Carlo signature estimate: entry frequencies plus standard errors."""

    vector: SignatureVector
    stderr: tuple[float, ...]
    trials: int


def tail(sig: SignatureVector) -> TailVector:
    """Exact tail sums S[j] = sum_{i > j} s_i for j = 0..n-1 (S[0] = 1)."""
    values = []
    acc = Fraction(1)
    for p in sig.probabilities[:-1]:
        values.append(acc)
        acc -= p
    values.append(acc)
    return TailVector(tuple(values))


def _block_mask(block: tuple[int, ...]) -> int:
    mask = 0
    for link_id in block:
        mask |= 1 << (link_id - 1)
    return mask


def _check_partition(net: Network, pi: OrderedPartition) -> None:
    seen: set[int] = set()
    for block in pi:
        if not block:
            raise ValueError("empty block in ordered partition")
        for link_id in block:
            if not 1 <= link_id <= net.n or link_id in seen:
                raise ValueError(f"invalid ordered partition for n={net.n}: {pi}")
            seen.add(link_id)
    if len(seen) != net.n:
        raise ValueError(f"partition does not cover all {net.n} links: {pi}")


def _min_completion(table: tuple[bool, ...], prior_mask: int, block: tuple[int, ...]) -> int:
    # smallest subset of the killing block that, with the prior failures,
    # forms a cut; block sizes are <= n so the subset search is bounded
    for size in range(1, len(block) + 1):
        for sub in combinations(block, size):
            if not table[prior_mask | _block_mask(sub)]:
                return size
    raise AssertionError("cumulative union was a cut but no completion found")


def death_number(net: Network, pi: OrderedPartition) -> int:
    """Death number M of an ordered partition: minimal killing failure count.

    Equals the minimum over all linear extensions of ``pi`` of the classical
    failure index.  The full union of blocks must be a cut (every terminal
    pair is joined only through links), otherwise AssertionError.
    """
    _check_partition(net, pi)
    table = up_table(net)
    prior_mask = 0
    prior_count = 0
    for block in pi:
        cum = prior_mask | _block_mask(block)
        if not table[cum]:
            return prior_count + _min_completion(table, prior_mask, block)
        prior_mask = cum
        prior_count += len(block)
    raise AssertionError("full link set is not a cut; terminals not link-joined?")


def killing_shock_index(net: Network, pi: OrderedPartition) -> int:
    """Index of the first block whose cumulative failed set is a cut."""
    _check_partition(net, pi)
    table = up_table(net)
    cum = 0
    for index, block in enumerate(pi, start=1):
        cum |= _block_mask(block)
        if not table[cum]:
            return index
    raise AssertionError("full link set is not a cut; terminals not link-joined?")


def _require_alive(net: Network) -> None:
    if not is_up(net, ()):
        raise ValueError("network is down with no failures; signatures undefined")


def t_signature(net: Network, limit: int = EXACT_ENUMERATION_LIMIT) -> SignatureVector:
    """Tie signature by exact enumeration of all n* ordered partitions.

    Entry i is (number of partitions with death number i) / n*.  For n above
    ``limit`` raises :class:`EnumerationLimitError`; use
    :func:`t_signature_mc` instead.
    """
    _require_alive(net)
    n = net.n
    counts = [0] * n
    try:
        for pi in enumerate_ordered_partitions(n, limit=limit):
            counts[death_number(net, pi) - 1] += 1
    except EnumerationLimitError as exc:
        raise EnumerationLimitError(f"{exc}; see t_signature_mc") from None
    total = count_ordered_partitions(n)
    return SignatureVector("tie", tuple(Fraction(c, total) for c in counts))


def fatal_signature(net: Network, limit: int = EXACT_ENUMERATION_LIMIT) -> SignatureVector:
    """Fatal-shock signature: entry i is P(the i-th fatal shock kills), exact."""
    _require_alive(net)
    n = net.n
    counts = [0] * n
    for pi in enumerate_ordered_partitions(n, limit=limit):
        counts[killing_shock_index(net, pi) - 1] += 1
    total = count_ordered_partitions(n)
    return SignatureVector("fatal", tuple(Fraction(c, total) for c in counts))


def classical_signature(net: Network) -> SignatureVector:
    """Classical signature by enumeration of all n! failure orderings."""
    _require_alive(net)
    n = net.n
    if n > CLASSICAL_ENUMERATION_LIMIT:
        raise ValueError(
            f"classical signature enumerates n! orderings; n={n} exceeds "
            f"the limit of {CLASSICAL_ENUMERATION_LIMIT}"
        )
    table = up_table(net)
    counts = [0] * n
    for perm in permutations(range(n)):
        mask = 0
        for index, bit in enumerate(perm, start=1):
            mask |= 1 << bit
            if not table[mask]:
                counts[index - 1] += 1
                break
    return SignatureVector(
        "classical", tuple(Fraction(c, factorial(n)) for c in counts)
    )


def t_signature_mc(net: Network, trials: int, seed: int) -> EstimatedSignature:
    """Tie signature estimated from uniform ordered-partition samples.

    Entry i is the frequency of death number i over ``trials`` samples (an
    exact rational count/trials, so entries still sum to 1); stderr holds the
    per-entry binomial standard error.  Reproducible for a given seed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    _require_alive(net)
    n = net.n
    rng = random.Random(seed)
    counts = [0] * n
    for _ in range(trials):
        pi = sample_ordered_partition(n, rng)
        counts[death_number(net, pi) - 1] += 1
    probabilities = tuple(Fraction(c, trials) for c in counts)
    stderr = tuple(
        sqrt(float(p) * (1.0 - float(p)) / trials) for p in probabilities
    )
    vector = SignatureVector("tie", probabilities)
    return EstimatedSignature(vector=vector, stderr=stderr, trials=trials)
