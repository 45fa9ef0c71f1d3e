"""Graph corpora: exhaustive labeled, atlas (non-isomorphic), seeded random
connected and random planar samplers, and graph6 files."""

from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, is_connected, is_planar, read_graph6_lines

DEFAULT_SEED = 20240601
ATLAS_MAX_N = 7


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on vertex set {0..n-1}, in order of edge mask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if is_connected(g):
            yield g


def exhaustive_connected(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from labeled_connected_graphs(n)


def atlas_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on
    ``n <= 7`` vertices, from the networkx graph atlas."""
    if n > ATLAS_MAX_N:
        raise ValueError(f"the atlas stops at {ATLAS_MAX_N} vertices")
    import networkx as nx

    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and (n == 0 or nx.is_connected(h)):
            if n:
                yield Graph(n, [tuple(sorted(e)) for e in h.edges()])


def atlas_connected(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from atlas_connected_graphs(n)


def random_tree(rng: random.Random, n: int) -> list[tuple[int, int]]:
    order = list(range(n))
    rng.shuffle(order)
    return [tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)]


def random_connected_graph(rng: random.Random, n: int, max_m: int | None = None) -> Graph:
    """A random spanning tree plus a uniformly sized random set of extra
    edges; the edge count is uniform on ``[n-1, min(max_m, n(n-1)/2)]``."""
    top = n * (n - 1) // 2
    if max_m is not None:
        top = max(n - 1, min(top, max_m))
    m = rng.randint(n - 1, top) if n > 1 else 0
    tree = random_tree(rng, n)
    have = set(tree)
    rest = [p for p in combinations(range(n), 2) if p not in have]
    return Graph(n, tree + rng.sample(rest, m - len(tree)))


def random_connected(count: int, orders: Iterable[int] = (7, 8, 9), seed: int = DEFAULT_SEED,
                     max_m: int | None = 30) -> Iterator[Graph]:
    rng = random.Random(seed)
    orders = list(orders)
    for _ in range(count):
        yield random_connected_graph(rng, rng.choice(orders), max_m)


def random_planar_graph(rng: random.Random, n: int) -> Graph:
    """A random tree grown by random edge insertions that keep planarity,
    up to a target edge count drawn uniformly from ``[n-1, 3n-6]``."""
    tree = random_tree(rng, n)
    if n < 3:
        return Graph(n, tree)
    target = rng.randint(n - 1, 3 * n - 6)
    edges = list(tree)
    have = set(tree)
    cand = [p for p in combinations(range(n), 2) if p not in have]
    rng.shuffle(cand)
    for p in cand:
        if len(edges) >= target:
            break
        trial = Graph(n, edges + [p])
        if is_planar(trial):
            edges.append(p)
    return Graph(n, edges)


def random_planar(count: int, orders: Iterable[int] = (7, 8), seed: int = DEFAULT_SEED) -> Iterator[Graph]:
    rng = random.Random(seed)
    orders = list(orders)
    for _ in range(count):
        yield random_planar_graph(rng, rng.choice(orders))


def read_corpus(path: str | Path) -> Iterator[tuple[int, Graph]]:
    """``(line number, graph)`` for each graph6 line of a file."""
    with open(path, encoding="ascii") as fh:
        yield from read_graph6_lines(fh)
