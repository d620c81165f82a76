from itertools import combinations

import pytest

from netsig.network import NetworkFormatError, is_up, parse_network, up_table

from conftest import BRIDGE_TEXT, THREE_LINK_TEXT, make_parallel_net, make_series_net


def test_parse_three_link_net(three_link_net):
    assert three_link_net.n == 3
    assert three_link_net.nodes == {"a", "b", "c"}
    assert three_link_net.terminals == {"a", "c"}
    assert three_link_net.endpoints == (("a", "b"), ("b", "c"), ("b", "c"))


def test_parse_bridge(bridge_net):
    assert bridge_net.n == 5
    assert bridge_net.terminals == {"a", "d"}


def test_parse_comments_and_blank_lines():
    net = parse_network("# title\n\nnode a # end comment\nnode b\nlink 1 a b\nterminals a b\n")
    assert net.n == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("node a\nnode b\nlink 1 a b\nterminals\n", "fewer than 2 terminals"),
        ("node a\nnode b\nlink 1 a b\n", "fewer than 2 terminals"),
        ("node a\nnode b\nlink 1 a b\nlink 1 a b\nterminals a b\n", "duplicate link id"),
        ("node a\nnode b\nlink 1 a z\nterminals a b\n", "unknown endpoint"),
        ("node a\nnode b\nlink 2 a b\nterminals a b\n", "link ids must be exactly"),
        ("node a\nnode b\nlink x a b\nterminals a b\n", "line 3"),
        ("node a\nnode b\nedge 1 a b\nterminals a b\n", "unknown directive"),
        ("node a\nnode b\nlink 1 a b\nterminals a b\nterminals a b\n", "duplicate 'terminals'"),
        ("node a\nnode b\nlink 1 a b\nterminals a b q\n", "unknown terminal"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(NetworkFormatError, match=fragment):
        parse_network(text)


def test_is_up_bridge_cases(bridge_net):
    assert is_up(bridge_net, {1, 5})  # a-c-b-d survives
    assert not is_up(bridge_net, {1, 2})  # terminal a isolated
    assert is_up(bridge_net, ())


def test_is_up_rejects_unknown_link(bridge_net):
    with pytest.raises(ValueError, match="unknown link id"):
        is_up(bridge_net, {9})


@pytest.mark.parametrize("maker", [make_series_net, make_parallel_net])
@pytest.mark.parametrize("n", [1, 2, 4])
def test_structure_extremes(maker, n):
    net = maker(n)
    assert is_up(net, ())
    assert not is_up(net, net.link_ids)


def test_monotone_structure(bridge_net, three_link_net):
    # a superset of a cut is a cut: coherent structure function
    for net in (bridge_net, three_link_net):
        ids = list(net.link_ids)
        for r in range(len(ids) + 1):
            for failed in combinations(ids, r):
                if not is_up(net, failed):
                    extra = [i for i in ids if i not in failed]
                    for more in extra:
                        assert not is_up(net, set(failed) | {more})


def test_self_loop_never_matters():
    base = parse_network("node a\nnode b\nlink 1 a b\nlink 2 a b\nterminals a b\n")
    looped = parse_network(
        "node a\nnode b\nlink 1 a b\nlink 2 a b\nlink 3 b b\nterminals a b\n"
    )
    for failed in ({1}, {2}, {1, 2}, set()):
        assert is_up(base, failed) == is_up(looped, failed)
        assert is_up(looped, failed | {3}) == is_up(looped, failed)


def test_up_table_matches_is_up(bridge_net):
    table = up_table(bridge_net)
    for mask in range(32):
        failed = {i + 1 for i in range(5) if mask >> i & 1}
        assert table[mask] == is_up(bridge_net, failed)
    assert len(table) == 32
    assert up_table(bridge_net) is table


def test_parallel_links_are_distinct(three_link_net):
    # failing one of the parallel pair must not disconnect the terminals
    assert is_up(three_link_net, {2})
    assert is_up(three_link_net, {3})
    assert not is_up(three_link_net, {2, 3})
    assert not is_up(three_link_net, {1})


def test_network_texts_round_trip():
    for text in (THREE_LINK_TEXT, BRIDGE_TEXT):
        net = parse_network(text)
        assert is_up(net, ())
