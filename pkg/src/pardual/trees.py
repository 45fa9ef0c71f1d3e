"""Spanning trees and the tree-side invariants.

* decay number  x_G = min over spanning trees T of c(G - E(T))
* Xuong deficiency  xi(G) = min over T of the number of components of
  G - E(T) with an odd number of edges
* maximum genus  gamma_M(G) = (beta(G) - xi(G)) / 2

All three are exact searches over spanning trees.  The search branches on
edges in index order, trying "edge in the tree" first, so complete trees
come out in lexicographic order of their edge-index lists; a branch is cut
as soon as excluding an edge would disconnect what remains (the edge is a
bridge and is therefore forced into the tree) or a lower bound shows the
branch cannot beat the incumbent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import (EdgeSubset, Graph, adjacency_of, betti, component_masks,
                    count_components, require_connected)


@dataclass(frozen=True)
class SpanningTree:
    host: Graph
    tree_edges: EdgeSubset

    @property
    def cotree(self) -> EdgeSubset:
        return self.tree_edges.complement()


@dataclass(frozen=True)
class TreeOptResult:
    value: int
    witness: SpanningTree
    trees_examined: int


class _Search:
    """Depth-first traversal of the spanning trees of ``g``.

    ``bound(tree_mask, tree_adj, pos)`` returns a lower bound on the
    objective over all completions of the partial tree, given the edges
    already placed in the tree; ``leaf(tree_mask)`` receives each complete
    tree.  Both may inspect ``self`` for the current state.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.edges = g.edges
        self.everything = (1 << g.n) - 1
        # adjacency of the remaining graph G - X (X = excluded edges)
        self.rest_adj = list(g.adj)
        # adjacency of the complement of the partial tree, G - T
        self.cot_adj = list(g.adj)
        # union-find free forest membership via component labels
        self.label = list(range(g.n))
        self.stop = False

    def _find(self, v):
        while self.label[v] != v:
            v = self.label[v]
        return v

    def run(self, leaf: Callable[[int], bool], bound: Callable[[int, int], bool] | None = None):
        self._leaf = leaf
        self._prune = bound
        self.stop = False
        if self.n <= 1:
            leaf(0)
            return
        self._go(0, 0, 0)

    def _go(self, pos, tmask, tsize):
        if tsize == self.n - 1:
            if self._leaf(tmask):
                self.stop = True
            return
        if self._prune is not None and self._prune(tmask, pos):
            return
        m = len(self.edges)
        # skip edges that would close a cycle with the partial tree
        while pos < m:
            u, v = self.edges[pos]
            if self._find(u) != self._find(v):
                break
            pos += 1
        if pos == m:
            return
        u, v = self.edges[pos]
        ru, rv = self._find(u), self._find(v)
        bu, bv = 1 << u, 1 << v
        # include
        self.label[ru] = rv
        self.cot_adj[u] &= ~bv
        self.cot_adj[v] &= ~bu
        self._go(pos + 1, tmask | 1 << pos, tsize + 1)
        self.cot_adj[u] |= bv
        self.cot_adj[v] |= bu
        self.label[ru] = ru
        if self.stop:
            return
        # exclude, unless the edge is a bridge of what remains
        self.rest_adj[u] &= ~bv
        self.rest_adj[v] &= ~bu
        if count_components(self.rest_adj, self.everything) == 1:
            self._go(pos + 1, tmask, tsize)
        self.rest_adj[u] |= bv
        self.rest_adj[v] |= bu


def enumerate_spanning_trees(g: Graph) -> Iterator[SpanningTree]:
    """Every spanning tree of ``g`` exactly once, in lexicographic order of
    the trees' sorted edge-index lists."""
    require_connected(g, "spanning-tree enumeration")
    found: list[int] = []
    _Search(g).run(lambda t: found.append(t) and False)
    # the backtracking search is recursive, so the list is materialised
    # first; graphs handled here have at most a few million trees
    for t in found:
        yield SpanningTree(g, EdgeSubset(g, t))


def count_spanning_trees(g: Graph) -> int:
    require_connected(g, "spanning-tree counting")
    count = 0

    def leaf(_t):
        nonlocal count
        count += 1
        return False

    _Search(g).run(leaf)
    return count


def cotree_components(g: Graph, tree_mask: int) -> int:
    """x_G(T) = c(G - E(T))."""
    return count_components(adjacency_of(g.n, g.edges, g.full_mask & ~tree_mask),
                            (1 << g.n) - 1)


def odd_cotree_components(g: Graph, tree_mask: int) -> int:
    """xi(G - E(T)): components of the cotree graph with an odd edge count."""
    cot = g.full_mask & ~tree_mask
    comps = component_masks(adjacency_of(g.n, g.edges, cot), (1 << g.n) - 1)
    return sum(1 for c in comps if _edges_inside(g, cot, c) & 1)


def _edges_inside(g: Graph, emask: int, vmask: int) -> int:
    k = 0
    i = 0
    while emask:
        if emask & 1:
            u, _ = g.edges[i]
            if vmask >> u & 1:
                k += 1
        emask >>= 1
        i += 1
    return k


def decay_number(g: Graph) -> TreeOptResult:
    """Decay number with a lexicographically least optimal tree."""
    require_connected(g, "decay number")
    s = _Search(g)
    best = [g.n + 1, 0]
    examined = 0
    floor = max(1, 2 * g.n - g.m - 1)

    def bound(_tmask, _pos):
        # the final cotree is a subgraph of G - (partial tree)
        return count_components(s.cot_adj, s.everything) >= best[0]

    def leaf(tmask):
        nonlocal examined
        examined += 1
        val = cotree_components(g, tmask)
        if val < best[0]:
            best[:] = [val, tmask]
        return best[0] <= floor

    s.run(leaf, bound)
    return TreeOptResult(best[0], SpanningTree(g, EdgeSubset(g, best[1])), examined)


def xuong_deficiency(g: Graph) -> TreeOptResult:
    """xi(G) with a lexicographically least optimal tree."""
    require_connected(g, "Xuong deficiency")
    s = _Search(g)
    beta = betti(g)
    floor = beta & 1
    best = [g.m + 1, 0]
    examined = 0
    m = g.m
    edges = g.edges

    def bound(tmask, pos):
        # A component of G - (partial tree) with no undecided edge inside is
        # already a component of the final cotree graph.
        comps = component_masks(s.cot_adj, s.everything)
        open_ = 0
        for i in range(pos, m):
            if not tmask >> i & 1:
                u, v = edges[i]
                open_ |= 1 << u
        odd = 0
        for c in comps:
            if not c & open_:
                cnt = 0
                for u in range(g.n):
                    if c >> u & 1:
                        cnt += s.cot_adj[u].bit_count()
                if (cnt // 2) & 1:
                    odd += 1
        if (odd - beta) & 1:
            odd += 1
        return odd >= best[0]

    def leaf(tmask):
        nonlocal examined
        examined += 1
        val = odd_cotree_components(g, tmask)
        if val < best[0]:
            best[:] = [val, tmask]
        return best[0] <= floor

    s.run(leaf, bound)
    return TreeOptResult(best[0], SpanningTree(g, EdgeSubset(g, best[1])), examined)


def max_genus(g: Graph) -> int:
    """Maximum orientable genus via Xuong's formula."""
    require_connected(g, "maximum genus")
    diff = betti(g) - xuong_deficiency(g).value
    if diff < 0 or diff & 1:
        raise AssertionError(f"beta - xi = {diff} is not a nonnegative even integer")
    return diff // 2


def is_upper_embeddable(g: Graph) -> bool:
    require_connected(g, "upper-embeddability")
    return xuong_deficiency(g).value <= 1
