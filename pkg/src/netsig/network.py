"""Two-state networks: parsing, validation, and the T-connectivity structure function.

A network is an undirected multigraph with integer-labelled links and a set of
terminal nodes.  The network is *up* for a given set of failed links iff every
terminal lies in the same connected component of the graph restricted to the
surviving links.

Network description file format (UTF-8, line oriented, ``#`` starts a comment):

    node <id>                 one line per node
    link <int-id> <node> <node>
    terminals <node> <node> ...

Link ids must be given explicitly and must form exactly ``1..n`` so that
signature indices are stable across tools.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "FailureSet",
    "Network",
    "NetworkFormatError",
    "is_up",
    "load_network",
    "parse_network",
    "up_table",
]

# A failure set is just the set of failed link ids.
FailureSet = frozenset[int]


class NetworkFormatError(ValueError):
    """Raised when a network description file is malformed or inconsistent."""


@dataclass(frozen=True)
class Network:
    """Immutable two-state network.

    ``endpoints[i]`` holds the endpoint pair of link ``i + 1``; link ids are
    therefore exactly ``1..n`` by construction.  Parallel links and self-loops
    are allowed (self-loops never affect connectivity).
    """

    nodes: frozenset[str]
    endpoints: tuple[tuple[str, str], ...]
    terminals: frozenset[str]

    def __post_init__(self) -> None:
        for u, v in self.endpoints:
            if u not in self.nodes or v not in self.nodes:
                raise NetworkFormatError(f"unknown endpoint node in link ({u}, {v})")
        if not self.terminals <= self.nodes:
            bad = sorted(self.terminals - self.nodes)
            raise NetworkFormatError(f"unknown terminal node(s): {', '.join(bad)}")
        if len(self.terminals) < 2:
            raise NetworkFormatError("fewer than 2 terminals")

    @property
    def n(self) -> int:
        """Number of links."""
        return len(self.endpoints)

    @property
    def link_ids(self) -> range:
        return range(1, self.n + 1)

    def links(self) -> Iterator[tuple[int, str, str]]:
        """Yield (link_id, u, v) triples in id order."""
        for i, (u, v) in enumerate(self.endpoints, start=1):
            yield i, u, v


def parse_network(text: str) -> Network:
    """Parse and validate a network description.

    Raises :class:`NetworkFormatError` with the offending line number for
    syntax problems, and without one for global consistency problems
    (duplicate link id, gap in link ids, unknown endpoint, too few terminals).
    """
    nodes: set[str] = set()
    links: dict[int, tuple[str, str]] = {}
    terminals: list[str] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword, args = fields[0], fields[1:]
        if keyword == "node":
            if len(args) != 1:
                raise NetworkFormatError(f"line {lineno}: 'node' takes one identifier")
            nodes.add(args[0])
        elif keyword == "link":
            if len(args) != 3:
                raise NetworkFormatError(
                    f"line {lineno}: 'link' takes an id and two endpoint nodes"
                )
            try:
                link_id = int(args[0])
            except ValueError:
                raise NetworkFormatError(
                    f"line {lineno}: link id {args[0]!r} is not an integer"
                ) from None
            if link_id < 1:
                raise NetworkFormatError(f"line {lineno}: link id must be >= 1")
            if link_id in links:
                raise NetworkFormatError(f"line {lineno}: duplicate link id {link_id}")
            links[link_id] = (args[1], args[2])
        elif keyword == "terminals":
            if terminals is not None:
                raise NetworkFormatError(f"line {lineno}: duplicate 'terminals' line")
            terminals = args
        else:
            raise NetworkFormatError(f"line {lineno}: unknown directive {keyword!r}")

    if terminals is None:
        terminals = []
    expected = set(range(1, len(links) + 1))
    if set(links) != expected:
        missing = sorted(expected - set(links))
        raise NetworkFormatError(
            f"link ids must be exactly 1..{len(links)}; missing {missing}"
        )
    endpoints = tuple(links[i] for i in sorted(links))
    return Network(
        nodes=frozenset(nodes),
        endpoints=endpoints,
        terminals=frozenset(terminals),
    )


def load_network(path: str) -> Network:
    """Read and parse a network description file."""
    with open(path, encoding="utf-8") as handle:
        return parse_network(handle.read())


def is_up(net: Network, failed: Iterable[int]) -> bool:
    """Structure function: True iff all terminals are connected by surviving links.

    ``failed`` is a set of link ids; ids outside ``1..n`` raise ValueError.
    Pure function of (net, failed), safe for concurrent use.
    """
    failed_set = frozenset(failed)
    for link_id in failed_set:
        if not 1 <= link_id <= net.n:
            raise ValueError(f"unknown link id in failure set: {link_id}")

    parent: dict[str, str] = {v: v for v in net.nodes}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for link_id, u, v in net.links():
        if link_id in failed_set:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    roots = {find(t) for t in net.terminals}
    return len(roots) == 1


@lru_cache(maxsize=32)
def up_table(net: Network) -> tuple[bool, ...]:
    """Structure function tabulated over all 2**n failure sets.

    Entry ``mask`` is the state for the failure set whose member ids are the
    set bits of ``mask`` (bit ``i`` for link ``i + 1``).  Enumeration and
    simulation code uses this table to make state queries O(1); the table is
    built once per network through :func:`is_up`.
    """
    if net.n > 22:
        raise ValueError(f"structure table for n={net.n} links would be too large")
    table = []
    for mask in range(1 << net.n):
        failed = [i + 1 for i in range(net.n) if mask >> i & 1]
        table.append(is_up(net, failed))
    return tuple(table)
