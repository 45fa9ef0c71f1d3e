"""Edge-subset optimization.

The central quantity is ``y_G(A) = 2 c(G - A) - |A| - 1`` and its maximum
``y_G`` over all ``A``.  For a connected planar graph of order ``n`` the
maximum partial-dual genus is ``n - y_G``.  The same search machinery
computes Nebesky's form of the Xuong deficiency,
``max_A c(G-A) + b(G-A) - |A| - 1`` with ``b`` counting components of odd
cycle rank.

The search is a depth-first branch and bound over edges in index order.
Each edge is first kept (left in ``G - A``) and then deleted (put in
``A``).  Two facts keep it small:

* an edge whose endpoints are already joined by kept edges is never worth
  deleting -- dropping it from ``A`` raises either objective by at least
  zero and shrinks ``A``;
* with ``K`` the kept edges and ``R = G - A_partial``, every completion
  satisfies ``y <= c(K) + c(R) - |A_partial| - 1``, because splitting a
  connected piece into ``p`` parts costs at least ``p - 1`` deletions.
  Since ``c + b <= 2c`` the same number bounds the Nebesky objective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .checks import BoundCheck, leq, not_applicable
from .errors import CapacityError, DomainError
from .graph import (EdgeSubset, Graph, adjacency_of, as_mask, component_masks,
                    count_components, edge_connectivity, induced_subgraph, is_planar, lex_less,
                    require_connected)

DEFAULT_MAX_EDGES = 30
STRUCTURE_KSET_LIMIT = 10


@dataclass(frozen=True)
class SubsetOptResult:
    """Optimum of an edge-subset objective.  ``witness`` has minimum
    cardinality among optimal subsets and is lexicographically least among
    those."""

    value: int
    witness: EdgeSubset
    subsets_pruned: int
    subsets_visited: int


@dataclass(frozen=True)
class QuotientGraph:
    graph: Graph
    component_of: tuple[int, ...]
    origin: dict[tuple[int, int], tuple[int, ...]]

    @property
    def num_vertices(self) -> int:
        return self.graph.n


@dataclass
class StructureReport:
    clause_i: bool
    clause_ii: bool
    clause_iii: bool
    smallest: bool
    kset_exhaustive: bool
    non_induced: list = field(default_factory=list)
    bad_component_y: list = field(default_factory=list)
    bad_pairs: list = field(default_factory=list)
    bad_groups: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.clause_i and self.clause_ii and self.clause_iii


def y_value(g: Graph, a) -> int:
    require_connected(g, "y_G(A)")
    mask = as_mask(g, a)
    c = count_components(adjacency_of(g.n, g.edges, g.full_mask & ~mask), (1 << g.n) - 1)
    return 2 * c - mask.bit_count() - 1


def nebesky_value(g: Graph, a) -> int:
    """c(G-A) + b(G-A) - |A| - 1."""
    require_connected(g, "Nebesky objective")
    mask = as_mask(g, a)
    return _nebesky_eval(g, g.full_mask & ~mask, mask.bit_count())


def _nebesky_eval(g, keep, size):
    comps = component_masks(adjacency_of(g.n, g.edges, keep), (1 << g.n) - 1)
    where = [0] * g.n
    for k, c in enumerate(comps):
        v = c
        while v:
            low = v & -v
            where[low.bit_length() - 1] = k
            v ^= low
    edge_count = [0] * len(comps)
    i = 0
    while keep:
        if keep & 1:
            edge_count[where[g.edges[i][0]]] += 1
        keep >>= 1
        i += 1
    odd = sum(1 for k, c in enumerate(comps) if (edge_count[k] - c.bit_count() + 1) & 1)
    return len(comps) + odd - size - 1


class _SubsetSearch:
    def __init__(self, g: Graph, leaf_value):
        self.g = g
        self.edges = g.edges
        self.m = g.m
        self.everything = (1 << g.n) - 1
        self.rest_adj = list(g.adj)  # adjacency of G - A_partial
        self.parent = list(range(g.n))  # union-find over kept edges, no compression
        self.size = [1] * g.n
        self.kept_comps = g.n
        self.leaf_value = leaf_value
        self.best = (None, None, None)  # value, |A|, mask
        self.visited = 0
        self.pruned = 0

    def _find(self, v):
        p = self.parent
        while p[v] != v:
            v = p[v]
        return v

    def _offer(self, value, mask):
        bv, bs, bm = self.best
        size = mask.bit_count()
        if (bv is None or value > bv or (value == bv and (
                size < bs or (size == bs and lex_less(mask, bm))))):
            self.best = (value, size, mask)

    def run(self):
        self._go(0, 0, 0)
        return self.best

    def _go(self, pos, amask, asize):
        self.visited += 1
        if pos == self.m:
            self._offer(self.leaf_value(self, amask, asize), amask)
            return
        bv, bs, _ = self.best
        if bv is not None:
            ub = self.kept_comps + count_components(self.rest_adj, self.everything) - asize - 1
            if ub < bv or (ub == bv and asize > bs):
                self.pruned += 1
                return
        u, v = self.edges[pos]
        ru, rv = self._find(u), self._find(v)
        # keep the edge
        if ru != rv:
            if self.size[ru] > self.size[rv]:
                ru, rv = rv, ru
            self.parent[ru] = rv
            self.size[rv] += self.size[ru]
            self.kept_comps -= 1
            self._go(pos + 1, amask, asize)
            self.kept_comps += 1
            self.size[rv] -= self.size[ru]
            self.parent[ru] = ru
        else:
            self._go(pos + 1, amask, asize)
            return  # deleting an edge inside a kept component never helps
        # delete the edge
        bu, bv_ = 1 << u, 1 << v
        self.rest_adj[u] &= ~bv_
        self.rest_adj[v] &= ~bu
        self._go(pos + 1, amask | 1 << pos, asize + 1)
        self.rest_adj[u] |= bv_
        self.rest_adj[v] |= bu


def _y_leaf(search, amask, asize):
    return 2 * search.kept_comps - asize - 1


def _nebesky_leaf(search, amask, asize):
    g = search.g
    return _nebesky_eval(g, g.full_mask & ~amask, asize)


def _optimize(g, leaf, max_edges, what):
    require_connected(g, what)
    if g.m > max_edges:
        raise CapacityError(f"{what}: {g.m} edges exceeds the enumeration capacity {max_edges}")
    s = _SubsetSearch(g, leaf)
    value, _, mask = s.run()
    return SubsetOptResult(value, EdgeSubset(g, mask), s.pruned, s.visited)


def y_max(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> SubsetOptResult:
    """y_G with a smallest (then lexicographically least) optimal subset."""
    return _optimize(g, _y_leaf, max_edges, "y_G")


def nebesky_deficiency(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> SubsetOptResult:
    """Xuong deficiency computed as Nebesky's maximum over edge subsets."""
    return _optimize(g, _nebesky_leaf, max_edges, "Nebesky deficiency")


def max_partial_dual_genus(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    """n - y_G for a connected planar graph."""
    require_connected(g, "maximum partial-dual genus")
    if not is_planar(g):
        raise DomainError("the formula n - y_G holds only for planar graphs")
    return g.n - y_max(g, max_edges).value


def quotient_graph(g: Graph, a) -> QuotientGraph:
    """Contract each component of G - A to a vertex; drop loops and parallels."""
    require_connected(g, "quotient graph")
    mask = as_mask(g, a)
    comps = component_masks(adjacency_of(g.n, g.edges, g.full_mask & ~mask), (1 << g.n) - 1)
    where = [0] * g.n
    for k, c in enumerate(comps):
        for v in range(g.n):
            if c >> v & 1:
                where[v] = k
    origin: dict[tuple[int, int], list[int]] = {}
    for i, (u, v) in enumerate(g.edges):
        if mask >> i & 1 and where[u] != where[v]:
            key = tuple(sorted((where[u], where[v])))
            origin.setdefault(key, []).append(i)
    q = Graph(len(comps), list(origin))
    return QuotientGraph(q, tuple(where), {k: tuple(v) for k, v in origin.items()})


def _components_of(g: Graph, mask: int) -> list[int]:
    return component_masks(adjacency_of(g.n, g.edges, g.full_mask & ~mask), (1 << g.n) - 1)


def check_optimal_structure(g: Graph, result: SubsetOptResult, smallest: bool = True,
                            max_edges: int = DEFAULT_MAX_EDGES) -> StructureReport:
    """Evaluate the three structural properties every optimal subset has.

    With ``smallest`` the witness is taken to be a minimum-cardinality
    optimum and the sharper cut bounds ``2k-3`` / ``1`` are applied;
    otherwise ``2k-2`` / ``2``.
    """
    mask = as_mask(g, result.witness)
    y = result.value
    if y_value(g, mask) != y:
        raise ValueError("result value does not match its witness on this graph")
    size = mask.bit_count()
    comps = _components_of(g, mask)
    c = len(comps)
    rep = StructureReport(True, True, True, smallest, c <= STRUCTURE_KSET_LIMIT)

    # (i)
    if y == 1:
        rep.clause_i = size == 2 * c - 2
    elif y >= 2:
        rep.clause_i = size >= 1 and c >= 2 and size <= 2 * c - 3
    else:
        rep.clause_i = False
    if not rep.clause_i:
        rep.notes.append(f"(i) fails: y={y}, |A|={size}, c={c}")

    # (ii)
    where = [0] * g.n
    for k, cm in enumerate(comps):
        for v in range(g.n):
            if cm >> v & 1:
                where[v] = k
    for k, cm in enumerate(comps):
        vs = [v for v in range(g.n) if cm >> v & 1]
        inside = [i for i, (u, v) in enumerate(g.edges) if where[u] == k and where[v] == k]
        if any(mask >> i & 1 for i in inside):
            rep.clause_ii = False
            rep.non_induced.append(vs)
        sub, _ = induced_subgraph(g, vs)
        if y_max(sub, max_edges).value != 1:
            rep.clause_ii = False
            rep.bad_component_y.append(vs)
    if c == 1 and mask:
        rep.clause_ii = False
        rep.notes.append("(ii) fails: single component but A is nonempty")

    # (iii)
    pair_cap, group_slack = (1, 3) if smallest else (2, 2)
    w = [[0] * c for _ in range(c)]
    for u, v in g.edges:
        a, b = where[u], where[v]
        if a != b:
            w[a][b] += 1
            w[b][a] += 1
    for a, b in combinations(range(c), 2):
        if w[a][b] > pair_cap:
            rep.clause_iii = False
            rep.bad_pairs.append((a, b, w[a][b]))
    if rep.kset_exhaustive and c >= 2:
        cut = [0] * (1 << c)
        for s in range(1, 1 << c):
            low = s & -s
            i = low.bit_length() - 1
            rest = s ^ low
            extra = 0
            r = rest
            while r:
                lb = r & -r
                extra += w[i][lb.bit_length() - 1]
                r ^= lb
            cut[s] = cut[rest] + extra
            k = s.bit_count()
            if k >= 2 and cut[s] > 2 * k - group_slack:
                rep.clause_iii = False
                if len(rep.bad_groups) < 20:
                    rep.bad_groups.append(([i for i in range(c) if s >> i & 1], cut[s]))
    elif c > STRUCTURE_KSET_LIMIT:
        rep.notes.append(f"(iii) k-subset bound checked pairwise only (c={c})")
    return rep


def lemma25_bound_check(g: Graph, result: SubsetOptResult, lam: int | None = None) -> BoundCheck:
    """Upper bound on y_G from the component count of a smallest optimum,
    for edge connectivity 1, 2 or 3."""
    tid = "L2.5"
    if result.value < 2:
        return not_applicable(tid, "y_G < 2")
    if lam is None:
        lam = edge_connectivity(g)
    if not 1 <= lam <= 3:
        return not_applicable(tid, f"lambda = {lam} outside 1..3")
    mask = as_mask(g, result.witness)
    c = len(_components_of(g, mask))
    bound = {1: c, 2: c - 1, 3: c // 2 - 1}[lam]
    return leq(tid, result.value, bound, note=f"lambda={lam}, c(G-A)={c}",
               witness_data={"A": EdgeSubset(g, mask).indices()})
