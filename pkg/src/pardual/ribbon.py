"""Combinatorial maps: orientable cellular embeddings as dart permutations.

Edge ``i`` owns darts ``2i`` and ``2i+1``; the edge involution is
``d -> d ^ 1`` and is never stored.  ``sigma`` sends a dart to the next
dart counterclockwise around its vertex, and faces are the orbits of
``d -> sigma[d ^ 1]``.  For a dart built from graph edge ``(u, v)`` with
``u < v``, dart ``2i`` sits at ``u`` and ``2i+1`` at ``v``.

Partial duality with respect to a single edge swaps the ``sigma`` images
of the edge's two darts, i.e. ``sigma' = sigma o (2i 2i+1)``.  Duals along
different edges commute, so the partial dual along a set is the
composition of the single-edge rewrites, and the full dual is
``sigma' = sigma o alpha``, whose vertices are the faces of the original.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import CapacityError, DomainError, GraphFormatError, MapInvariantError
from .graph import EdgeSubset, Graph, is_connected, lex_less, planar_rotation, subset_key

DEFAULT_MAX_DUAL_EDGES = 22


@dataclass(frozen=True)
class EmbeddingSpec:
    """Rotation system: for each vertex, the counterclockwise cyclic order
    of the indices of its incident edges."""

    rotation: tuple[tuple[int, ...], ...]

    @classmethod
    def from_mapping(cls, n: int, rot: Mapping[int, Sequence[int]]) -> "EmbeddingSpec":
        return cls(tuple(tuple(rot.get(v, ())) for v in range(n)))

    def to_text(self) -> str:
        return "".join(f"{v}: {' '.join(map(str, r))}\n" for v, r in enumerate(self.rotation))

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "EmbeddingSpec":
        rot: dict[int, tuple[int, ...]] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            head, sep, tail = line.partition(":")
            if not sep:
                raise GraphFormatError(f"line {lineno}: expected 'v: e1 e2 ...'")
            try:
                v = int(head)
                rot[v] = tuple(int(x) for x in tail.split())
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: {exc}") from exc
        if n is None:
            n = max(rot, default=-1) + 1
        return cls.from_mapping(n, rot)


@dataclass(frozen=True)
class CombinatorialMap:
    sigma: tuple[int, ...]
    edge_labels: tuple[int, ...] = None

    def __post_init__(self):
        if len(self.sigma) % 2:
            raise MapInvariantError("odd number of darts")
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise MapInvariantError("sigma is not a permutation of the darts")
        if self.edge_labels is None:
            object.__setattr__(self, "edge_labels", tuple(range(len(self.sigma) // 2)))

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @property
    def num_edges(self) -> int:
        return len(self.sigma) // 2

    def face_permutation(self) -> tuple[int, ...]:
        s = self.sigma
        return tuple(s[d ^ 1] for d in range(len(s)))

    def vertices(self) -> list[tuple[int, ...]]:
        return _orbits(self.sigma)

    def faces(self) -> list[tuple[int, ...]]:
        return _orbits(self.face_permutation())

    @property
    def num_vertices(self) -> int:
        # the dartless map is a single isolated vertex
        return _count_cycles(self.sigma) if self.sigma else 1

    @property
    def num_faces(self) -> int:
        return _count_cycles(self.face_permutation()) if self.sigma else 1

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def is_connected(self) -> bool:
        nd = len(self.sigma)
        if nd == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for x in (self.sigma[d], d ^ 1):
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return len(seen) == nd

    def genus(self) -> int:
        chi = self.euler_characteristic()
        if chi & 1 or chi > 2:
            raise MapInvariantError(f"Euler characteristic {chi} of a connected map must be even and <= 2")
        return (2 - chi) // 2

    def profile(self) -> tuple[int, int, int, int]:
        """(vertices, edges, faces, genus)."""
        return self.num_vertices, self.num_edges, self.num_faces, self.genus()

    def rotation_spec(self) -> EmbeddingSpec:
        """Rotation at each vertex orbit, as map-edge indices (vertex orbits
        numbered by least dart)."""
        return EmbeddingSpec(tuple(tuple(d >> 1 for d in orb) for orb in self.vertices()))


def _orbits(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = p[d]
        out.append(tuple(cyc))
    return out


def _count_cycles(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    c = 0
    for start in range(len(p)):
        if not seen[start]:
            c += 1
            d = start
            while not seen[d]:
                seen[d] = True
                d = p[d]
    return c


def _dart(g: Graph, e: int, v: int) -> int:
    u, w = g.edges[e]
    if v == u:
        return 2 * e
    if v == w:
        return 2 * e + 1
    raise GraphFormatError(f"edge {e} = {g.edges[e]} is not incident to vertex {v}")


def map_from_rotation(g: Graph, rot) -> CombinatorialMap:
    """Build the map realizing a rotation system (an EmbeddingSpec or a
    mapping ``vertex -> edge indices in counterclockwise order``)."""
    if not is_connected(g):
        raise DomainError("rotation systems are built for connected graphs")
    if isinstance(rot, EmbeddingSpec):
        rot = dict(enumerate(rot.rotation))
    sigma = [-1] * (2 * g.m)
    seen = set()
    for v in range(g.n):
        order = list(rot.get(v, ()))
        if sorted(order) != sorted(g.index_of(v, w) for w in g.neighbors(v)):
            raise GraphFormatError(f"rotation at vertex {v} is not a cyclic order of its edges")
        darts = [_dart(g, e, v) for e in order]
        for i, d in enumerate(darts):
            if d in seen:
                raise GraphFormatError(f"half-edge of edge {d >> 1} repeated at vertex {v}")
            seen.add(d)
            sigma[d] = darts[(i + 1) % len(darts)]
    return CombinatorialMap(tuple(sigma))


def _neighbor_rotation_to_edges(g: Graph, nbr_rot: Mapping[int, Sequence[int]]) -> dict[int, list[int]]:
    return {v: [g.index_of(v, w) for w in nbr_rot[v]] for v in range(g.n)}


def planar_embedding(g: Graph) -> CombinatorialMap:
    """A genus-0 map of a connected planar graph."""
    if not is_connected(g):
        raise DomainError("planar_embedding requires a connected graph")
    nbr = planar_rotation(g)
    if nbr is None:
        raise DomainError("graph is not planar")
    m = map_from_rotation(g, _neighbor_rotation_to_edges(g, nbr))
    if m.genus() != 0:
        raise MapInvariantError("planarity routine produced a non-planar rotation")
    return m


def reflect(m: CombinatorialMap, vertex_orbits: Iterable[int] | None = None) -> CombinatorialMap:
    """Reverse the rotation at the given vertex orbits (all by default)."""
    sigma = list(m.sigma)
    orbits = m.vertices()
    chosen = range(len(orbits)) if vertex_orbits is None else vertex_orbits
    for k in chosen:
        orb = orbits[k]
        for i, d in enumerate(orb):
            sigma[d] = orb[i - 1]
    return CombinatorialMap(tuple(sigma), m.edge_labels)


def _rotation_product(g: Graph) -> int:
    total = 1
    for d in g.degrees:
        total *= factorial(max(d - 1, 0))
    return total


def all_rotation_systems(g: Graph, limit: int = 10**6):
    """Every rotation system of ``g`` as a map (there are prod (deg-1)!)."""
    if _rotation_product(g) > limit:
        raise CapacityError("too many rotation systems to enumerate")
    per_vertex = []
    for v in range(g.n):
        inc = [g.index_of(v, w) for w in g.neighbors(v)]
        if len(inc) <= 1:
            per_vertex.append([inc])
        else:
            first, rest = inc[0], inc[1:]
            per_vertex.append([[first, *p] for p in permutations(rest)])
    for choice in product(*per_vertex):
        yield map_from_rotation(g, dict(enumerate(choice)))


def planar_embeddings(g: Graph, k: int = 3, seed: int = 0, brute_limit: int = 20000) -> list[CombinatorialMap]:
    """Up to ``k`` distinct genus-0 rotation systems of ``g``.

    Sources, in order: the planarity routine's embedding and its mirror,
    reflections at vertex subsets, the planarity routine run on relabeled
    copies, and (for small rotation spaces) exhaustive enumeration.  Fewer
    than ``k`` are returned only when fewer were found; graphs with
    max degree 2 have one rotation system and 3-connected planar graphs
    have exactly two.
    """
    base = planar_embedding(g)
    if g.n <= 1:
        return [base]
    found: dict[tuple[int, ...], CombinatorialMap] = {base.sigma: base}

    def offer(mp):
        if len(found) < k and mp.sigma not in found and mp.genus() == 0:
            found[mp.sigma] = mp

    offer(reflect(base))
    n = g.n
    if len(found) < k and n <= 10:
        for size in range(1, n):
            for mask in range(1, 1 << n):
                if mask.bit_count() == size:
                    offer(reflect(base, [v for v in range(n) if mask >> v & 1]))
                if len(found) >= k:
                    break
            if len(found) >= k:
                break
    rng = random.Random(seed)
    tries = 0
    while len(found) < k and tries < 40:
        tries += 1
        order = list(range(n))
        rng.shuffle(order)
        nbr = planar_rotation(g, order)
        mp = map_from_rotation(g, _neighbor_rotation_to_edges(g, nbr))
        offer(mp)
        offer(reflect(mp))
    if len(found) < k and _rotation_product(g) <= brute_limit:
        for mp in all_rotation_systems(g, brute_limit):
            offer(mp)
            if len(found) >= k:
                break
    return list(found.values())


def count_planar_rotation_systems(g: Graph, cap: int | None = None, limit: int = 10**6) -> int:
    """Number of genus-0 rotation systems, stopping early at ``cap``."""
    count = 0
    for mp in all_rotation_systems(g, limit):
        if mp.genus() == 0:
            count += 1
            if cap is not None and count >= cap:
                break
    return count


def faces(m: CombinatorialMap) -> list[tuple[int, ...]]:
    return m.faces()


def genus(m: CombinatorialMap) -> int:
    if not m.is_connected():
        raise DomainError("genus is defined here for connected maps only")
    return m.genus()


def geometric_dual(m: CombinatorialMap) -> CombinatorialMap:
    return CombinatorialMap(m.face_permutation(), m.edge_labels)


def _edge_mask(m: CombinatorialMap, a) -> int:
    if isinstance(a, EdgeSubset):
        wanted = set(a.indices())
        return sum(1 << j for j, lab in enumerate(m.edge_labels) if lab in wanted)
    if isinstance(a, int):
        return a
    return sum(1 << j for j in set(a))


def partial_dual_edge(m: CombinatorialMap, j: int) -> CombinatorialMap:
    """Partial dual along the single map edge ``j``."""
    s = list(m.sigma)
    d = 2 * j
    s[d], s[d + 1] = s[d + 1], s[d]
    return CombinatorialMap(tuple(s), m.edge_labels)


def partial_dual(m: CombinatorialMap, a) -> CombinatorialMap:
    """Partial dual along an edge set: an EdgeSubset of the underlying
    graph (matched via ``edge_labels``), a bitmask over map edges, or an
    iterable of map-edge indices."""
    mask = _edge_mask(m, a)
    s = list(m.sigma)
    j = 0
    while mask:
        if mask & 1:
            d = 2 * j
            s[d], s[d + 1] = s[d + 1], s[d]
        mask >>= 1
        j += 1
    return CombinatorialMap(tuple(s), m.edge_labels)


@dataclass(frozen=True)
class PartialDualSummary:
    max_genus: int
    witness: int  # bitmask over map edges
    histogram: dict[int, int]

    def witness_edges(self) -> list[int]:
        return list(subset_key(self.witness))

    def histogram_csv(self) -> str:
        rows = ["genus,count"] + [f"{g},{c}" for g, c in sorted(self.histogram.items())]
        return "\n".join(rows) + "\n"


def _same_cycle(p, a, b):
    x = p[a]
    while x != a:
        if x == b:
            return True
        x = p[x]
    return False


def enumerate_partial_dual_genus(m: CombinatorialMap,
                                 max_edges: int = DEFAULT_MAX_DUAL_EDGES) -> PartialDualSummary:
    """Genus of every partial dual of ``m``: the maximum, the least maximizer
    (in the package-wide subset order) and the genus histogram.

    Subsets are visited in Gray-code order, so consecutive partial duals
    differ by one single-edge rewrite.  Right-multiplying a permutation by
    a transposition splits a cycle (both darts on it) or merges two, so the
    vertex and face counts are updated by +-1 per step.
    """
    e = m.num_edges
    if e > max_edges:
        raise CapacityError(f"{e} edges exceeds partial-dual enumeration capacity {max_edges}")
    if not m.is_connected():
        raise DomainError("partial-dual enumeration requires a connected map")
    if e == 0:
        return PartialDualSummary(0, 0, {0: 1})
    sigma = list(m.sigma)
    phi = list(m.face_permutation())
    v = _count_cycles(sigma)
    f = _count_cycles(phi)
    hist = [0] * (e + 2)
    g0 = (2 - v + e - f) // 2
    hist[g0] = 1
    best_g, best_mask = g0, 0
    mask = 0
    for k in range(1, 1 << e):
        j = (k & -k).bit_length() - 1
        d1 = 2 * j
        d2 = d1 + 1
        v += 1 if _same_cycle(sigma, d1, d2) else -1
        f += 1 if _same_cycle(phi, d1, d2) else -1
        sigma[d1], sigma[d2] = sigma[d2], sigma[d1]
        phi[d1], phi[d2] = phi[d2], phi[d1]
        mask ^= 1 << j
        gen = 2 - v + e - f
        if gen & 1 or gen < 0:
            raise MapInvariantError(f"Euler parity violated at subset {mask:#x}")
        gen >>= 1
        hist[gen] += 1
        if gen > best_g or (gen == best_g and lex_less(mask, best_mask)):
            best_g, best_mask = gen, mask
    return PartialDualSummary(best_g, best_mask, {i: c for i, c in enumerate(hist) if c})
