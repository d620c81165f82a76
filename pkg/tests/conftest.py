import random

import pytest

from netsig.network import Network, is_up, parse_network

THREE_LINK_TEXT = """\
# three links: a-b plus a parallel pair b-c
node a
node b
node c
link 1 a b
link 2 b c
link 3 b c
terminals a c
"""

BRIDGE_TEXT = """\
node a
node b
node c
node d
link 1 a b
link 2 a c
link 3 b c
link 4 b d
link 5 c d
terminals a d
"""


@pytest.fixture(scope="session")
def three_link_net() -> Network:
    """3-link net whose minimal cuts are {1} and {2,3}."""
    return parse_network(THREE_LINK_TEXT)


@pytest.fixture(scope="session")
def bridge_net() -> Network:
    return parse_network(BRIDGE_TEXT)


def make_series_net(n: int) -> Network:
    """Chain of n links; every single link is a cut."""
    lines = [f"node v{i}" for i in range(n + 1)]
    lines += [f"link {i} v{i - 1} v{i}" for i in range(1, n + 1)]
    lines.append(f"terminals v0 v{n}")
    return parse_network("\n".join(lines))


def make_parallel_net(n: int) -> Network:
    """n parallel links between the two terminals."""
    lines = ["node a", "node b"]
    lines += [f"link {i} a b" for i in range(1, n + 1)]
    lines.append("terminals a b")
    return parse_network("\n".join(lines))


def make_random_net(rng: random.Random, n_links: int) -> Network:
    """Random connected multigraph fixture with two terminal nodes.

    Regenerates until the intact network is up and the fully failed one is
    down, so every fixture satisfies the structure-function preconditions.
    """
    while True:
        n_nodes = rng.randint(3, max(3, n_links))
        names = [f"v{i}" for i in range(n_nodes)]
        lines = [f"node {v}" for v in names]
        for i in range(1, n_links + 1):
            u, v = rng.sample(names, 2)
            lines.append(f"link {i} {u} {v}")
        t1, t2 = rng.sample(names, 2)
        lines.append(f"terminals {t1} {t2}")
        net = parse_network("\n".join(lines))
        if is_up(net, ()) and not is_up(net, net.link_ids):
            return net


@pytest.fixture(scope="session")
def single_link_net() -> Network:
    return make_series_net(1)
