"""Graph constructors.

Labeling conventions (fixed so that witnesses are reproducible):

* ``path``: ``0-1-...-(n-1)``; ``cycle``: the path plus ``(0, n-1)``;
  ``star``: centre ``0``, leaves ``1..n-1``; ``complete``: all pairs.
* ``identify_vertices``: the first part keeps its labels (the merged vertex
  carries the first part's chosen label); the other parts' remaining
  vertices follow in part order, each part in increasing label order.
* ``cut_join``: ``g2``'s vertex ``v`` becomes ``g1.n + v``.
* ``tensor_kt``: vertex ``v`` of ``h`` becomes the clique on
  ``t*v .. t*v + t - 1``; the edges of ``h`` at ``v`` are attached to the
  clique's vertices ``0, 1, ...`` in the counterclockwise order of a plane
  embedding of ``h`` starting from the lowest-indexed edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import DomainError
from .graph import Graph, edge_connectivity, is_connected, is_planar, is_regular

BASIC_FAMILIES = ("path", "cycle", "star", "complete", "empty")
FAMILY_TAGS = BASIC_FAMILIES + ("fig1_G", "fig1_Gprime", "tensor", "identify", "cut_join", "catalog")


def make_basic(tag: str, n: int) -> Graph:
    if tag == "path":
        if n < 1:
            raise ValueError("path needs n >= 1")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if tag == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    if tag == "star":
        if n < 2:
            raise ValueError("star needs n >= 2")
        return Graph(n, [(0, i) for i in range(1, n)])
    if tag == "complete":
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return Graph(n, list(combinations(range(n), 2)))
    if tag == "empty":
        if n < 1:
            raise ValueError("empty graph needs n >= 1")
        return Graph(n)
    raise ValueError(f"unknown basic family {tag!r}")


def path(n):
    return make_basic("path", n)


def cycle(n):
    return make_basic("cycle", n)


def star(n):
    return make_basic("star", n)


def complete(n):
    return make_basic("complete", n)


def identify_vertices(parts: Sequence[tuple[Graph, int]]) -> Graph:
    """Glue connected graphs together at one chosen vertex of each."""
    if len(parts) < 2:
        raise ValueError("identify_vertices needs at least two parts")
    for g, v in parts:
        if not is_connected(g):
            raise DomainError("every part must be connected")
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in a part of order {g.n}")
    g0, v0 = parts[0]
    edges = list(g0.edges)
    nxt = g0.n
    for g, v in parts[1:]:
        relabel = {}
        for w in range(g.n):
            if w == v:
                relabel[w] = v0
            else:
                relabel[w] = nxt
                nxt += 1
        edges += [(relabel[a], relabel[b]) for a, b in g.edges]
    return Graph(nxt, edges)


def cut_join(g1: Graph, g2: Graph, cross: Sequence[tuple[int, int]]) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus one or two edges ``(u, v)``
    with ``u`` in ``g1`` and ``v`` in ``g2``; those edges form a minimal
    edge cut."""
    if not 1 <= len(cross) <= 2:
        raise ValueError("cut_join takes one or two cross edges")
    if not (is_connected(g1) and is_connected(g2)):
        raise DomainError("both sides must be connected")
    if len(set(map(tuple, cross))) != len(cross):
        raise ValueError("duplicate cross edge")
    for u, v in cross:
        if not (0 <= u < g1.n and 0 <= v < g2.n):
            raise ValueError(f"cross edge ({u}, {v}) out of range")
    off = g1.n
    edges = list(g1.edges) + [(a + off, b + off) for a, b in g2.edges]
    edges += [(u, v + off) for u, v in cross]
    return Graph(g1.n + g2.n, edges)


# the two joining edges of Fig. 1, as edges of fig1_G
FIG1_E2 = (1, 4)
FIG1_E1 = (2, 6)


def fig1_G() -> Graph:
    """Two copies of K_4 joined by two independent edges."""
    return cut_join(complete(4), complete(4), [(1, 0), (2, 2)])


def fig1_Gprime() -> Graph:
    """``fig1_G`` minus the edge ``FIG1_E1``: two K_4 joined by a bridge."""
    return cut_join(complete(4), complete(4), [(1, 0)])


def tensor_kt(h: Graph, t: int) -> Graph:
    """Replace each vertex of a connected subcubic planar ``h`` by a K_t and
    attach the edges of ``h`` to distinct clique vertices."""
    from .ribbon import planar_embedding  # ribbon imports graph only

    if t not in (2, 3):
        raise ValueError("t must be 2 or 3")
    if not is_connected(h):
        raise DomainError("h must be connected")
    if max(h.degrees, default=0) > t:
        raise ValueError(f"t = {t} is smaller than the maximum degree of h")
    edges = []
    for v in range(h.n):
        edges += [(t * v + a, t * v + b) for a, b in combinations(range(t), 2)]
    if h.m:
        emb = planar_embedding(h)  # raises DomainError when h is not planar
        slot = {}
        for orb in emb.vertices():
            d0 = min(orb, key=lambda d: d >> 1)
            i0 = orb.index(d0)
            for k, d in enumerate(orb[i0:] + orb[:i0]):
                u, w = h.edges[d >> 1]
                vert = u if d % 2 == 0 else w
                slot[d] = t * vert + k
        for i in range(h.m):
            edges.append((slot[2 * i], slot[2 * i + 1]))
    elif not is_planar(h):
        raise DomainError("h must be planar")
    g = Graph(t * h.n, edges)
    if not is_planar(g):
        raise AssertionError("tensor construction lost planarity")
    return g


def _prism(k: int) -> Graph:
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    spokes = [(i, k + i) for i in range(k)]
    return Graph(2 * k, outer + inner + spokes)


def _cube() -> Graph:
    return Graph(8, [(a, b) for a in range(8) for b in range(a + 1, 8) if (a ^ b).bit_count() == 1])


def _dodecahedron() -> Graph:
    # outer 5-cycle, middle 10-cycle, inner 5-cycle
    outer = [(i, (i + 1) % 5) for i in range(5)]
    middle = [(5 + i, 5 + (i + 1) % 10) for i in range(10)]
    inner = [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    to_mid = [(i, 5 + 2 * i) for i in range(5)]
    to_inner = [(5 + 2 * i + 1, 15 + i) for i in range(5)]
    return Graph(20, outer + middle + inner + to_mid + to_inner)


CATALOG_NAMES = ("k4", "prism", "cube", "pentagonal_prism", "dodecahedron")


def catalog_cubic_3ec_planar() -> list[tuple[str, Graph]]:
    """3-edge-connected cubic planar graphs, each verified on construction."""
    out = [
        ("k4", complete(4)),
        ("prism", _prism(3)),
        ("cube", _cube()),
        ("pentagonal_prism", _prism(5)),
        ("dodecahedron", _dodecahedron()),
    ]
    for name, g in out:
        if not (is_regular(g, 3) and is_planar(g) and edge_connectivity(g) == 3):
            raise AssertionError(f"catalog graph {name} is not a 3-edge-connected cubic planar graph")
    return out


def catalog_graph(name: str) -> Graph:
    for key, g in catalog_cubic_3ec_planar():
        if key == name:
            return g
    raise ValueError(f"unknown catalog graph {name!r}; choose from {', '.join(CATALOG_NAMES)}")


@dataclass
class FamilySpec:
    """A constructor request, as addressed from the command line."""

    family: str
    n: int | None = None
    base: str | None = None
    t: int | None = None
    parts: list = field(default_factory=list)  # graphs (or (graph, vertex) pairs)
    cross: list = field(default_factory=list)

    def build(self) -> Graph:
        f = self.family
        if f in BASIC_FAMILIES:
            if self.n is None:
                raise ValueError(f"family {f} needs n")
            return make_basic(f, self.n)
        if f == "fig1_G":
            return fig1_G()
        if f == "fig1_Gprime":
            return fig1_Gprime()
        if f == "catalog":
            return catalog_graph(self.base or "k4")
        if f == "tensor":
            if self.t is None:
                raise ValueError("tensor needs t")
            return tensor_kt(_resolve_base(self.base, self.n), self.t)
        if f == "identify":
            return identify_vertices(self.parts)
        if f == "cut_join":
            g1, g2 = self.parts
            return cut_join(g1, g2, self.cross)
        raise ValueError(f"unknown family {f!r}")


def _resolve_base(base: str | None, n: int | None) -> Graph:
    if base is None:
        raise ValueError("tensor needs a base graph")
    if base in CATALOG_NAMES:
        return catalog_graph(base)
    if base in BASIC_FAMILIES:
        if n is None:
            raise ValueError(f"base {base} needs n")
        return make_basic(base, n)
    raise ValueError(f"unknown base graph {base!r}")
