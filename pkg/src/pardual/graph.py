"""Simple labeled graphs, their text formats, and basic invariants.

Vertices are ``0..n-1``.  Edges are stored as a lexicographically sorted
tuple of pairs ``(u, v)`` with ``u < v``; that order fixes the meaning of
bit ``i`` in every edge subset handled by the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import CapacityError, DomainError, Graph6Error, GraphFormatError, HostMismatchError

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62
CHROMATIC_MAX_N = 16


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices ``0..n-1``.

    The constructor accepts edges in any order and orientation; they are
    normalized to ``u < v`` and sorted.  Loops, repeated pairs and
    out-of-range endpoints raise ``ValueError``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        norm = []
        for e in self.edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append((u, v))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"parallel edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as vertex bitmasks."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of a host graph's edges, stored as a bitmask over
    ``host.edges``."""

    host: Graph
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.host.m:
            raise ValueError(f"bitmask {self.bits:#x} exceeds {self.host.m} edges")

    @classmethod
    def from_indices(cls, host: Graph, indices: Iterable[int]) -> "EdgeSubset":
        bits = 0
        for i in indices:
            bits |= 1 << i
        return cls(host, bits)

    @classmethod
    def from_edges(cls, host: Graph, edges: Iterable[tuple[int, int]]) -> "EdgeSubset":
        return cls.from_indices(host, (host.index_of(u, v) for u, v in edges))

    @classmethod
    def full(cls, host: Graph) -> "EdgeSubset":
        return cls(host, host.full_mask)

    def indices(self) -> list[int]:
        return _bits(self.bits)

    def edges(self) -> list[tuple[int, int]]:
        return [self.host.edges[i] for i in _bits(self.bits)]

    def complement(self) -> "EdgeSubset":
        return EdgeSubset(self.host, self.host.full_mask & ~self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, i):
        return bool(self.bits >> i & 1)

    def __repr__(self):
        return f"EdgeSubset({self.indices()})"


@dataclass(frozen=True)
class CliquePartition:
    host: Graph
    classes: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.classes)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def subset_key(mask: int) -> tuple[int, ...]:
    """Sort key giving the package-wide tie-break order on edge subsets:
    compare the ascending index lists lexicographically."""
    return tuple(_bits(mask))


def lex_less(a: int, b: int) -> bool:
    """``subset_key(a) < subset_key(b)`` without building the tuples."""
    x = a ^ b
    if not x:
        return False
    i = (x & -x).bit_length() - 1
    if a >> i & 1:
        return (b >> i) != 0
    return (a >> i) == 0


def as_mask(g: Graph, a) -> int:
    """Accept an EdgeSubset, an int bitmask, or an iterable of indices."""
    if isinstance(a, EdgeSubset):
        if a.host != g:
            raise HostMismatchError("edge subset belongs to a different graph")
        return a.bits
    if isinstance(a, int):
        if a < 0 or a >> g.m:
            raise ValueError(f"bitmask {a:#x} exceeds {g.m} edges")
        return a
    mask = 0
    for i in a:
        if not 0 <= i < g.m:
            raise ValueError(f"edge index {i} out of range")
        mask |= 1 << i
    return mask


# ---------------------------------------------------------------------------
# graph6 and edge-list formats
# ---------------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is skipped)."""
    s = text.strip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error(f"graphs with more than {GRAPH6_MAX_N} vertices are unsupported", base)
    if not 0 <= n <= GRAPH6_MAX_N:
        raise Graph6Error(f"malformed size byte {s[0]!r}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = s[1:]
    for k, ch in enumerate(payload):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"non-printable payload byte {ch!r}", base + 1 + k)
    if len(payload) < nbytes:
        raise Graph6Error(f"payload too short: expected {nbytes} bytes, got {len(payload)}",
                          base + 1 + len(payload))
    if len(payload) > nbytes:
        raise Graph6Error("trailing garbage after payload", base + 1 + nbytes)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(payload[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CapacityError(f"graph6 encoding supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = nacc = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


def parse_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from exc
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return Graph(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def encode_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Basic invariants
# ---------------------------------------------------------------------------

def adjacency_of(n: int, edges: Sequence[tuple[int, int]], mask: int) -> list[int]:
    adj = [0] * n
    while mask:
        low = mask & -mask
        u, v = edges[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        mask ^= low
    return adj


def component_masks(adj: Sequence[int], vertices: int) -> list[int]:
    """Connected components, as vertex bitmasks, of the graph induced on
    ``vertices`` by the adjacency bitmasks ``adj``."""
    comps = []
    rest = vertices
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & ~comp
            comp |= nb
            frontier |= nb
        comps.append(comp)
        rest &= ~comp
    return comps


def count_components(adj: Sequence[int], vertices: int) -> int:
    c = 0
    rest = vertices
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nb = adj[low.bit_length() - 1] & ~comp
            comp |= nb
            frontier |= nb
        rest &= ~comp
        c += 1
    return c


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by least vertex."""
    return [frozenset(_bits(c)) for c in component_masks(g.adj, (1 << g.n) - 1)]


def num_components(g: Graph, keep_mask: int | None = None) -> int:
    """c(G) or, with ``keep_mask``, c of the spanning subgraph on those edges."""
    if keep_mask is None:
        return count_components(g.adj, (1 << g.n) - 1)
    return count_components(adjacency_of(g.n, g.edges, keep_mask), (1 << g.n) - 1)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and num_components(g) == 1


def require_connected(g: Graph, what: str = "this operation") -> None:
    if not is_connected(g):
        raise DomainError(f"{what} requires a connected graph")


def betti(g: Graph) -> int:
    """Cycle rank |E| - |V| + c."""
    return g.m - g.n + num_components(g)


def degree_counts(g: Graph) -> tuple[int, int, int]:
    """``(n1, n2, min_degree)``: vertices of degree 1 and 2, and delta(G)."""
    d = g.degrees
    return d.count(1), d.count(2), min(d, default=0)


def complement(g: Graph) -> Graph:
    return Graph(g.n, [e for e in combinations(range(g.n), 2) if not g.has_edge(*e)])


def spanning_subgraph_minus(g: Graph, a) -> Graph:
    """G - A: delete the edges of ``a``, keep every vertex."""
    mask = as_mask(g, a)
    return Graph(g.n, [e for i, e in enumerate(g.edges) if not mask >> i & 1])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return G[vertices] relabeled to ``0..k-1`` and the old labels in order."""
    vs = sorted(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(vs), edges), vs


def is_regular(g: Graph, k: int) -> bool:
    return g.n > 0 and all(d == k for d in g.degrees)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


# ---------------------------------------------------------------------------
# Chromatic number
# ---------------------------------------------------------------------------

def _max_clique_size(adj: Sequence[int], vertices: int, budget: int = 10**6) -> int | None:
    """Exact clique number by branch and bound; None if the node budget runs out."""
    best = 0
    nodes = 0

    def expand(cand, size):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if not cand:
            if size > best:
                best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(cand & adj[v], size + 1)
            cand ^= low

    try:
        expand(vertices, 0)
    except _Budget:
        return None
    return best


class _Budget(Exception):
    pass


def _greedy_coloring(adj: Sequence[int], n: int) -> list[int]:
    """DSATUR greedy coloring."""
    color = [-1] * n
    sat = [0] * n  # bitmask of neighbour colours
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (sat[u].bit_count(), adj[u].bit_count()))
        c = (~sat[v] & (sat[v] + 1)).bit_length() - 1
        color[v] = c
        for u in _bits(adj[v]):
            sat[u] |= 1 << c
    return color


def _coloring_bnb(adj: Sequence[int], n: int, lower: int, upper: list[int], budget: int):
    """DSATUR branch and bound.  ``upper`` holds the incumbent coloring and is
    replaced in place by any strictly better one found."""
    best_k = max(upper) + 1
    color = [-1] * n
    nodes = 0

    def search(colored, k):
        nonlocal best_k, nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if colored == n:
            best_k = k
            upper[:] = color
            return best_k <= lower
        # most saturated uncolored vertex
        pick, key = -1, (-1, -1)
        for u in range(n):
            if color[u] < 0:
                used = 0
                for w in _bits(adj[u]):
                    if color[w] >= 0:
                        used |= 1 << color[w]
                kk = (used.bit_count(), adj[u].bit_count())
                if kk > key:
                    pick, key, pick_used = u, kk, used
        for c in range(k):
            if not pick_used >> c & 1:
                color[pick] = c
                if search(colored + 1, k):
                    return True
                color[pick] = -1
        if k + 1 < best_k:
            color[pick] = k
            if search(colored + 1, k + 1):
                return True
            color[pick] = -1
        return False

    search(0, 0)
    return best_k


def chromatic_number(g: Graph, max_n: int = CHROMATIC_MAX_N,
                     budget: int = 200_000) -> tuple[int, dict[int, int]]:
    """Exact chromatic number and an optimal proper coloring.

    Inputs with ``n <= max_n`` are always solved.  Larger inputs are solved
    only if branch and bound proves optimality within ``budget`` nodes;
    otherwise ``CapacityError`` is raised.  No heuristic value is ever
    returned.
    """
    n = g.n
    if n == 0:
        return 0, {}
    adj = g.adj
    everything = (1 << n) - 1
    coloring = _greedy_coloring(adj, n)
    limited = n > max_n
    node_budget = budget if limited else 10**12
    omega = _max_clique_size(adj, everything, budget=node_budget if limited else 10**12)
    lower = omega or 1
    if limited:
        co = complement(g)
        alpha = _max_clique_size(co.adj, everything, budget=budget)
        if alpha:
            lower = max(lower, -(-n // alpha))
    if max(coloring) + 1 > lower:
        try:
            _coloring_bnb(adj, n, lower, coloring, node_budget)
        except _Budget:
            raise CapacityError(
                f"chromatic number of a {n}-vertex graph not certified within {budget} nodes")
    return max(coloring) + 1, dict(enumerate(coloring))


def chromatic_number_ie(g: Graph) -> int:
    """Chromatic number by inclusion-exclusion over vertex subsets.

    Independent route used to cross-check :func:`chromatic_number`; O(2^n)
    memory, so restricted to ``n <= CHROMATIC_MAX_N``.
    """
    n = g.n
    if n > CHROMATIC_MAX_N:
        raise CapacityError(f"inclusion-exclusion supports n <= {CHROMATIC_MAX_N}")
    if n == 0:
        return 0
    closed = [a | 1 << v for v, a in enumerate(g.adj)]
    ind = [1] * (1 << n)  # number of independent subsets of S, empty set included
    for s in range(1, 1 << n):
        v = (s & -s).bit_length() - 1
        ind[s] = ind[s & ~(1 << v)] + ind[s & ~closed[v]]
    sign = [(-1) ** (n - s.bit_count()) for s in range(1 << n)]
    for k in range(1, n + 1):
        if sum(sg * c ** k for sg, c in zip(sign, ind)) > 0:
            return k
    return n


def clique_partition(g: Graph, **kwargs) -> CliquePartition:
    """Minimum partition of V(g) into cliques: colour classes of an optimal
    colouring of the complement."""
    chi, col = chromatic_number(complement(g), **kwargs)
    classes = [set() for _ in range(chi)]
    for v, c in col.items():
        classes[c].add(v)
    ordered = sorted((frozenset(c) for c in classes), key=min)
    return CliquePartition(g, tuple(ordered))


# ---------------------------------------------------------------------------
# Edge connectivity and planarity
# ---------------------------------------------------------------------------

def _unit_max_flow(n: int, adj: Sequence[int], s: int, t: int, cap_limit: int) -> int:
    # residual capacity on directed arcs; each undirected edge gives 1 each way
    res = {}
    for u in range(n):
        for v in _bits(adj[u]):
            res[(u, v)] = 1
    flow = 0
    while flow < cap_limit:
        parent = {s: None}
        queue = [s]
        for u in queue:
            if u == t:
                break
            for v in _bits(adj[u]):
                if v not in parent and res[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            break
        v = t
        while parent[v] is not None:
            u = parent[v]
            res[(u, v)] -= 1
            res[(v, u)] += 1
            v = u
        flow += 1
    return flow


def edge_connectivity(g: Graph) -> int:
    """lambda(G): size of a minimum edge cut; 0 if disconnected or n <= 1."""
    if g.n <= 1 or not is_connected(g):
        return 0
    best = min(g.degrees)
    for t in range(1, g.n):
        best = min(best, _unit_max_flow(g.n, g.adj, 0, t, best))
        if best == 1:
            break
    return best


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(to_networkx(g))[0]


def planar_rotation(g: Graph, order: Sequence[int] | None = None) -> dict[int, list[int]] | None:
    """Counterclockwise neighbour order at each vertex of some plane
    embedding, or None if ``g`` is not planar.

    ``order`` relabels the vertices before handing the graph to the
    planarity routine, which can steer it to a different embedding.
    """
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return None
    h = nx.Graph()
    vs = list(order) if order is not None else list(range(g.n))
    h.add_nodes_from(vs)
    rank = {v: i for i, v in enumerate(vs)}
    h.add_edges_from(sorted(g.edges, key=lambda e: (rank[e[0]], rank[e[1]])))
    ok, emb = nx.check_planarity(h)
    if not ok:
        return None
    return {v: list(reversed(list(emb.neighbors_cw_order(v)))) if g.adj[v] else []
            for v in range(g.n)}
