"""Theorem harness.

Each check takes an :class:`Invariants` bundle (values are computed lazily
and cached, so a suite of checks on one graph shares the expensive
optimizations) and returns one or more :class:`BoundCheck` records.  A
check whose inputs exceed capacity raises ``CapacityError``; the runner
records it as skipped.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .checks import THEOREM_IDS, BoundCheck, eq, leq, not_applicable
from .corpus import random_connected_graph
from .errors import CapacityError, PardualError
from .families import catalog_cubic_3ec_planar, cut_join, identify_vertices, tensor_kt
from .graph import (Graph, adjacency_of, betti, chromatic_number, clique_partition, complement,
                    component_masks, components, count_components, degree_counts, edge_connectivity,
                    encode_graph6, induced_subgraph, is_complete, is_connected, is_planar,
                    is_regular)
from .ribbon import enumerate_partial_dual_genus, planar_embeddings
from .subsets import check_optimal_structure, lemma25_bound_check, nebesky_deficiency, y_max
from .trees import decay_number, xuong_deficiency

DEFAULT_MAX_EDGES = 24
DEFAULT_MAX_DUAL_EDGES = 20
HARD_MAX_EDGES = 40
HARD_MAX_DUAL_EDGES = 26
DEFAULT_EMBEDDINGS = 3
TIGHT_LIST_LIMIT = 1000

# statements proven in the source; the conjecture is scanned, not asserted
PROVEN_IDS = tuple(t for t in THEOREM_IDS if t != "Conj4")


class Invariants:
    """Lazily computed invariants of one graph, with capacity guards."""

    def __init__(self, g: Graph, max_edges: int = DEFAULT_MAX_EDGES,
                 max_dual_edges: int = DEFAULT_MAX_DUAL_EDGES,
                 embeddings: int = DEFAULT_EMBEDDINGS, seed: int = 0):
        self.g = g
        self.max_edges = max_edges
        self.max_dual_edges = max_dual_edges
        self.embeddings = embeddings
        self.seed = seed

    def _guard(self, what: str, limit: int | None = None):
        limit = self.max_edges if limit is None else limit
        if self.g.m > limit:
            raise CapacityError(f"{what}: {self.g.m} edges exceeds capacity {limit}")

    @property
    def n(self):
        return self.g.n

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def beta(self) -> int:
        return betti(self.g)

    @cached_property
    def degree_counts(self) -> tuple[int, int, int]:
        return degree_counts(self.g)

    @cached_property
    def lam(self) -> int:
        return edge_connectivity(self.g)

    @cached_property
    def planar(self) -> bool:
        return is_planar(self.g)

    @cached_property
    def cubic(self) -> bool:
        return self.n > 0 and is_regular(self.g, 3)

    @cached_property
    def complete(self) -> bool:
        return is_complete(self.g)

    @cached_property
    def decay(self):
        # on cubic graphs the search stops at its global floor immediately
        if not self.cubic:
            self._guard("decay number")
        return decay_number(self.g)

    @cached_property
    def xuong(self):
        self._guard("Xuong deficiency")
        return xuong_deficiency(self.g)

    @cached_property
    def y(self):
        self._guard("y_G")
        return y_max(self.g, max_edges=self.max_edges)

    @cached_property
    def nebesky(self):
        self._guard("Nebesky deficiency")
        return nebesky_deficiency(self.g, max_edges=self.max_edges)

    @cached_property
    def gamma_m(self) -> int:
        # floor division on purpose: the consistency check catches odd differences
        return (self.beta - self.xuong.value) // 2

    @cached_property
    def chi_c(self) -> int:
        return chromatic_number(complement(self.g))[0]

    @cached_property
    def cliques(self):
        return clique_partition(self.g)

    @cached_property
    def pdg_formula(self) -> int:
        return self.n - self.y.value

    @cached_property
    def pdg_oracle(self) -> list[int]:
        """Enumerated maximum partial-dual genus on each of several plane
        embeddings."""
        self._guard("partial-dual enumeration", self.max_dual_edges)
        maps = planar_embeddings(self.g, k=self.embeddings, seed=self.seed)
        return [enumerate_partial_dual_genus(mp, self.max_dual_edges).max_genus for mp in maps]


def _inv(obj, **kw) -> Invariants:
    return obj if isinstance(obj, Invariants) else Invariants(obj, **kw)


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def _need_connected(inv, tid):
    if not inv.connected:
        return not_applicable(tid, "disconnected")
    return None


def check_T11(inv) -> list[BoundCheck]:
    """Xuong's formula is integral (``2 gamma_M + xi == beta``) and never
    exceeds the trivial bound ``floor(beta / 2)``."""
    inv = _inv(inv)
    tid = "T1.1-consistency"
    if (na := _need_connected(inv, tid)):
        return [na]
    xi = inv.xuong.value
    return [
        eq(tid, 2 * inv.gamma_m + xi, inv.beta, note="2*gamma_M + xi == beta",
           witness_data={"xi": xi, "gamma_M": inv.gamma_m, "upper_embeddable": xi <= 1}),
        leq(tid, inv.gamma_m, inv.beta // 2, note="gamma_M <= floor(beta/2)"),
    ]


def check_T12(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "T1.2"
    if (na := _need_connected(inv, tid)):
        return na
    return eq(tid, inv.xuong.value, inv.nebesky.value, note="xi by trees == xi by subsets",
              witness_data={"tree": inv.xuong.witness.tree_edges.indices(),
                            "A": inv.nebesky.witness.indices()})


def check_T13_oracle(inv) -> list[BoundCheck]:
    inv = _inv(inv)
    tid = "T1.3-oracle"
    if (na := _need_connected(inv, tid)):
        return [na]
    if not inv.planar:
        return [not_applicable(tid, "non-planar")]
    target = inv.n - inv.decay.value
    return [eq(tid, got, target, note=f"embedding {k}: enumerated max vs n - x")
            for k, got in enumerate(inv.pdg_oracle)]


def check_T14(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "T1.4"
    if (na := _need_connected(inv, tid)):
        return na
    return eq(tid, inv.decay.value, inv.y.value, note="x_G == y_G",
              witness_data={"tree": inv.decay.witness.tree_edges.indices(),
                            "A": inv.y.witness.indices()})


def check_T16(inv) -> BoundCheck:
    """Lower bound on the maximum partial-dual genus from low-degree
    vertex counts (planar graphs), scaled by 2."""
    inv = _inv(inv)
    tid = "T1.6"
    if (na := _need_connected(inv, tid)):
        return na
    if inv.n < 2:
        return not_applicable(tid, "n < 2")
    if not inv.planar:
        return not_applicable(tid, "non-planar")
    n1, n2, _ = inv.degree_counts
    return leq(tid, max(inv.n - n2 - 2 * n1 + 2, 0), 2 * inv.pdg_formula, scale=2,
               note="2*max{(n-n2-2n1)/2+1, 0} <= 2*pdg")


def check_T31(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "T3.1"
    if (na := _need_connected(inv, tid)):
        return na
    if inv.n < 2:
        return not_applicable(tid, "n < 2")
    n1, n2, _ = inv.degree_counts
    return leq(tid, 2 * inv.y.value, min(inv.n + n2 + 2 * n1 - 2, 2 * inv.n), scale=2,
               note="2*y <= min{n+n2+2n1-2, 2n}")


def check_C17(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "C1.7"
    if (na := _need_connected(inv, tid)):
        return na
    if not inv.planar:
        return not_applicable(tid, "non-planar")
    if inv.degree_counts[2] < 3:
        return not_applicable(tid, "min degree < 3")
    return leq(tid, inv.n + 2, 2 * inv.pdg_formula, scale=2, note="n + 2 <= 2*pdg")


def _t18_bound(n, lam, chi):
    if lam == 1:
        return max(0, n - 3 * chi)
    if lam == 2:
        return max(1, n - 3 * chi + 1)
    return max(-(-n // 2) + 1, n - (3 * chi) // 2 + 1)


def check_T18(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "T1.8"
    if (na := _need_connected(inv, tid)):
        return na
    if not inv.planar:
        return not_applicable(tid, "non-planar")
    if inv.n == 4 and inv.complete:
        return not_applicable(tid, "K_4 excluded")
    lam = inv.lam
    if lam == 0:
        return not_applicable(tid, "lambda = 0")
    if lam >= 4:
        return not_applicable(tid, "lambda >= 4: pdg = n-1 by the 4-edge-connected case")
    chi = inv.chi_c
    return leq(tid, _t18_bound(inv.n, lam, chi), inv.pdg_formula,
               note=f"lambda={lam} branch, chi(G^c)={chi}",
               witness_data={"lambda": lam, "chi_c": chi})


def _t32_bounds(n, lam, chi):
    if lam == 1:
        return n, 3 * chi
    if lam == 2:
        return n - 1, 3 * chi - 1
    return n // 2 - 1, (3 * chi) // 2 - 1


def check_T32(inv) -> BoundCheck:
    """Upper bound on y_G by order and by the clique cover number, for
    edge connectivity at most 3.  Both branches are recorded."""
    inv = _inv(inv)
    tid = "T3.2"
    if (na := _need_connected(inv, tid)):
        return na
    if inv.complete:
        return not_applicable(tid, "complete graph excluded")
    lam = inv.lam
    if not 1 <= lam <= 3:
        return not_applicable(tid, f"lambda = {lam} outside 1..3")
    chi = inv.chi_c
    y = inv.y.value
    order_b, chi_b = _t32_bounds(inv.n, lam, chi)
    return leq(tid, y, min(order_b, chi_b), note=f"lambda={lam} branch",
               witness_data={"lambda": lam, "chi_c": chi, "order_bound": order_b,
                             "chi_bound": chi_b, "order_slack": order_b - y,
                             "chi_slack": chi_b - y})


def check_P24(inv) -> list[BoundCheck]:
    inv = _inv(inv)
    tid = "P2.4"
    if (na := _need_connected(inv, tid)):
        return [na]
    if inv.lam < 4:
        return [not_applicable(tid, "lambda < 4")]
    return [eq(tid, inv.decay.value, 1, note="x_G == 1"), eq(tid, inv.y.value, 1, note="y_G == 1")]


def check_T26(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "T2.6"
    if (na := _need_connected(inv, tid)):
        return na
    if not inv.cubic:
        return not_applicable(tid, "not cubic")
    return eq(tid, 2 * inv.decay.value, inv.n - 2, scale=2, note="2*x == n - 2")


def check_T23(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "T2.3"
    if (na := _need_connected(inv, tid)):
        return na
    rep = check_optimal_structure(inv.g, inv.y, smallest=True, max_edges=inv.max_edges)
    bad = [name for name, ok in (("i", rep.clause_i), ("ii", rep.clause_ii), ("iii", rep.clause_iii))
           if not ok]
    data = {"failed_clauses": bad, "kset_exhaustive": rep.kset_exhaustive}
    if rep.notes:
        data["notes"] = rep.notes
    return leq(tid, len(bad), 0, note="violated clauses of the optimal-structure theorem",
               witness_data=data)


def check_L25(inv) -> BoundCheck:
    inv = _inv(inv)
    if (na := _need_connected(inv, "L2.5")):
        return na
    if inv.y.value < 2:
        return not_applicable("L2.5", "y_G < 2")
    return lemma25_bound_check(inv.g, inv.y, inv.lam)


def claims3_violations(g: Graph, witness_mask: int, classes) -> list[dict]:
    comp_of = [0] * g.n
    adj = adjacency_of(g.n, g.edges, g.full_mask & ~witness_mask)
    comps = component_masks(adj, (1 << g.n) - 1)
    for k, cm in enumerate(comps):
        for v in range(g.n):
            if cm >> v & 1:
                comp_of[v] = k
    bad = []
    for cls in classes:
        hit = {}
        for v in cls:
            hit.setdefault(comp_of[v], []).append(v)
        if len(hit) == 1:
            continue  # the class lies inside one component
        for k, vs in hit.items():
            if len(vs) > 1:
                bad.append({"claim": 1, "class": sorted(cls), "component": k})
        if not 2 <= len(cls) <= 3:
            bad.append({"claim": 2, "class": sorted(cls)})
    return bad


def check_claims3(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "Claims3"
    if (na := _need_connected(inv, tid)):
        return na
    if inv.y.value < 2:
        return not_applicable(tid, "y_G < 2")
    classes = inv.cliques.classes
    bad = claims3_violations(inv.g, inv.y.witness.bits, classes)
    return leq(tid, len(bad), 0, note="clique classes split across components",
               witness_data={"classes": [sorted(c) for c in classes], "violations": bad[:20]})


def _is_even_path(inv):
    n1, n2, _ = inv.degree_counts
    return inv.n >= 2 and inv.n % 2 == 0 and inv.g.m == inv.n - 1 and n1 == 2 and n2 == inv.n - 2


def _is_even_cycle(inv):
    return inv.n >= 4 and inv.n % 2 == 0 and is_regular(inv.g, 2)


def check_P41(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "P4.1"
    if (na := _need_connected(inv, tid)):
        return na
    if _is_even_path(inv):
        return eq(tid, inv.y.value, 2 * inv.chi_c, note="even path: y == 2 chi(G^c)")
    if _is_even_cycle(inv):
        return eq(tid, inv.y.value, 2 * inv.chi_c - 1, note="even cycle: y == 2 chi(G^c) - 1")
    return not_applicable(tid, "not an even path or even cycle")


def check_conj4(inv) -> BoundCheck:
    inv = _inv(inv)
    tid = "Conj4"
    if (na := _need_connected(inv, tid)):
        return na
    if inv.n == 3 and inv.complete:
        return not_applicable(tid, "C_3 excluded")
    lam = inv.lam
    if lam not in (1, 2):
        return not_applicable(tid, f"lambda = {lam} not in {{1, 2}}")
    chi = inv.chi_c
    return leq(tid, inv.y.value, 2 * chi - lam + 1, note=f"lambda={lam}, chi(G^c)={chi}",
               witness_data={"lambda": lam, "chi_c": chi})


def check_prior_bounds(inv) -> list[BoundCheck]:
    inv = _inv(inv)
    out = []
    if not inv.connected:
        return [not_applicable("prior-CK", "disconnected"), not_applicable("prior-Huang", "disconnected")]
    if inv.degree_counts[2] >= 3:
        out.append(leq("prior-CK", inv.beta, 4 * inv.gamma_m, scale=4, note="beta <= 4 gamma_M"))
    else:
        out.append(not_applicable("prior-CK", "min degree < 3"))
    lam = inv.lam
    if 1 <= lam <= 3:
        chi = inv.chi_c
        loss = {1: chi, 2: max(chi - 1, 1), 3: max(chi // 2 - 1, 1)}[lam]
        out.append(leq("prior-Huang", inv.beta - loss, 2 * inv.gamma_m, scale=2,
                       note=f"lambda={lam}: beta - {loss} <= 2 gamma_M"))
    else:
        out.append(not_applicable("prior-Huang", f"lambda = {lam} outside 1..3"))
    return out


# -- compositional statements ------------------------------------------------

def _side(g: Graph, vs) -> Graph:
    return induced_subgraph(g, sorted(vs))[0]


def _min_cut_split(g: Graph, k: int):
    """Lexicographically first edge set of size ``k`` whose removal
    disconnects ``g`` (a minimum cut when ``k`` equals the edge
    connectivity, hence minimal, leaving exactly two sides)."""
    for idx in combinations(range(g.m), k):
        mask = sum(1 << i for i in idx)
        if count_components(adjacency_of(g.n, g.edges, g.full_mask & ~mask), (1 << g.n) - 1) > 1:
            return idx
    return None


def check_L21(inv) -> BoundCheck:
    """Additivity of y_G across a minimum edge cut of size 1 or 2, using
    the graph's own cut."""
    inv = _inv(inv)
    tid = "L2.1"
    if (na := _need_connected(inv, tid)):
        return na
    lam = inv.lam
    if lam not in (1, 2):
        return not_applicable(tid, f"lambda = {lam} not in {{1, 2}}")
    cut = _min_cut_split(inv.g, lam)
    mask = sum(1 << i for i in cut)
    rest = Graph(inv.n, [e for i, e in enumerate(inv.g.edges) if not mask >> i & 1])
    sides = components(rest)
    ys = [y_max(_side(inv.g, s), inv.max_edges).value for s in sides]
    return eq(tid, inv.y.value, sum(ys) - lam + 1, note=f"cut of size {lam}",
              witness_data={"cut": list(cut), "side_y": ys})


def _cut_vertex_parts(g: Graph):
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub, labels = induced_subgraph(g, rest)
        comps = components(sub)
        if len(comps) >= 2:
            return v, [sorted({labels[u] for u in c} | {v}) for c in comps]
    return None


def check_L22(inv) -> BoundCheck:
    """Additivity of y_G over the blocks hanging at a cut vertex."""
    inv = _inv(inv)
    tid = "L2.2"
    if (na := _need_connected(inv, tid)):
        return na
    found = _cut_vertex_parts(inv.g) if inv.n >= 3 else None
    if found is None:
        return not_applicable(tid, "no cut vertex")
    v, parts = found
    ys = [y_max(_side(inv.g, p), inv.max_edges).value for p in parts]
    return eq(tid, inv.y.value, sum(ys) - len(ys) + 1, note=f"cut vertex {v}, k={len(ys)}",
              witness_data={"vertex": v, "part_y": ys})


def tensor_k3_base(inv):
    """If ``g`` is H (x) K_3 for a simple cubic H, return H, else None.

    In such a graph the triangles are exactly the K_3 copies, and they
    partition the vertex set."""
    g = inv.g
    if not inv.cubic or g.n % 3:
        return None
    adj = g.adj
    tri_of = [-1] * g.n
    tris = []
    for a, b in g.edges:
        common = adj[a] & adj[b]
        while common:
            c = (common & -common).bit_length() - 1
            common &= common - 1
            if c > b:
                for v in (a, b, c):
                    if tri_of[v] != -1:
                        return None
                    tri_of[v] = len(tris)
                tris.append((a, b, c))
    if any(t == -1 for t in tri_of):
        return None
    h_edges = set()
    for a, b in g.edges:
        ta, tb = tri_of[a], tri_of[b]
        if ta != tb:
            e = (min(ta, tb), max(ta, tb))
            if e in h_edges:
                return None
            h_edges.add(e)
    return Graph(len(tris), sorted(h_edges))


def check_P33(inv) -> list[BoundCheck]:
    """H (x) K_3 over a 3-edge-connected cubic planar H: 3-edge-connected,
    and y_G reaches both n/2 - 1 and 3 chi(G^c)/2 - 1."""
    inv = _inv(inv)
    tid = "P3.3"
    if (na := _need_connected(inv, tid)):
        return [na]
    h = tensor_k3_base(inv)
    if h is None:
        return [not_applicable(tid, "not of the form H (x) K_3")]
    if not (is_regular(h, 3) and is_planar(h) and edge_connectivity(h) == 3):
        return [not_applicable(tid, "base is not a 3-edge-connected cubic planar graph")]
    try:
        y, how = inv.y.value, "y_max"
    except CapacityError:
        y, how = inv.decay.value, "decay number"
    return [
        eq(tid, inv.lam, 3, note="lambda == 3"),
        eq(tid, 2 * y, inv.n - 2, scale=2, note=f"2y == n - 2 ({how})"),
        eq(tid, 2 * y, 3 * inv.chi_c - 2, scale=2, note=f"2y == 3 chi(G^c) - 2 ({how})",
           witness_data={"base_order": h.n, "chi_c": inv.chi_c}),
    ]


CHECKS: dict[str, Callable] = {
    "T1.1-consistency": check_T11,
    "T1.2": check_T12,
    "T1.3-oracle": check_T13_oracle,
    "T1.4": check_T14,
    "T1.6": check_T16,
    "C1.7": check_C17,
    "T1.8": check_T18,
    "L2.1": check_L21,
    "L2.2": check_L22,
    "T2.3": check_T23,
    "P2.4": check_P24,
    "L2.5": check_L25,
    "T2.6": check_T26,
    "T3.1": check_T31,
    "T3.2": check_T32,
    "Claims3": check_claims3,
    "P3.3": check_P33,
    "P4.1": check_P41,
    "Conj4": check_conj4,
    "prior-CK": lambda inv: [c for c in check_prior_bounds(inv) if c.theorem_id == "prior-CK"],
    "prior-Huang": lambda inv: [c for c in check_prior_bounds(inv) if c.theorem_id == "prior-Huang"],
}
assert tuple(CHECKS) == THEOREM_IDS


def resolve_theorems(selector: str | Sequence[str] | None) -> list[str]:
    if selector is None or selector == "all":
        return list(THEOREM_IDS)
    if isinstance(selector, str):
        selector = [s.strip() for s in selector.split(",") if s.strip()]
    out = []
    for s in selector:
        if s == "all":
            return list(THEOREM_IDS)
        if s not in CHECKS:
            raise ValueError(f"unknown theorem id {s!r}; choose from {', '.join(THEOREM_IDS)} or all")
        out.append(s)
    return out


def run_checks(inv: Invariants, theorems: Iterable[str]) -> tuple[list[BoundCheck], list[dict]]:
    """Evaluate the selected checks; returns (checks, skipped) where each
    skipped entry names the theorem and the capacity message."""
    checks, skipped = [], []
    for tid in theorems:
        try:
            out = CHECKS[tid](inv)
        except CapacityError as exc:
            skipped.append({"theorem_id": tid, "reason": str(exc)})
            continue
        checks.extend(out if isinstance(out, list) else [out])
    return checks, skipped


# ---------------------------------------------------------------------------
# Random compositional constructions
# ---------------------------------------------------------------------------

def check_compositional(parts, mode: str, cross=None, max_edges: int = HARD_MAX_EDGES) -> BoundCheck:
    """Build a composite from ``parts`` and compare its y_G with the sum
    rule.  ``identify`` takes ``(graph, vertex)`` pairs; ``cut_join`` takes
    two graphs and one or two cross pairs."""
    if mode == "identify":
        g = identify_vertices(parts)
        ys = [y_max(p, max_edges).value for p, _ in parts]
        rhs = sum(ys) - len(ys) + 1
        tid, note = "L2.2", f"k={len(parts)}"
    elif mode == "cut_join":
        g1, g2 = parts
        g = cut_join(g1, g2, cross)
        ys = [y_max(g1, max_edges).value, y_max(g2, max_edges).value]
        rhs = sum(ys) - len(cross) + 1
        tid, note = "L2.1", f"cut of size {len(cross)}"
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return eq(tid, y_max(g, max_edges).value, rhs, note=note,
              witness_data={"graph6": encode_graph6(g), "part_y": ys})


def random_compositional(count: int, seed: int = 0, max_part_n: int = 8,
                         max_total_edges: int = 30) -> Iterable[BoundCheck]:
    """Alternate seeded random cut joins (k in {1, 2}) and vertex
    identifications (k in {2, 3, 4}) of random connected parts.  Part edge
    counts are capped so the composite stays within ``max_total_edges``."""
    rng = random.Random(seed)
    for i in range(count):
        if i % 2 == 0:
            k = rng.choice((1, 2))
            while True:
                n1, n2 = rng.randint(1, max_part_n), rng.randint(1, max_part_n)
                if k == 1 or n1 * n2 >= 2:
                    break
            cap = (max_total_edges - k) // 2
            g1 = random_connected_graph(rng, n1, cap)
            g2 = random_connected_graph(rng, n2, cap)
            pairs = [(u, v) for u in range(n1) for v in range(n2)]
            cross = rng.sample(pairs, k)
            yield check_compositional((g1, g2), "cut_join", sorted(cross))
        else:
            k = rng.choice((2, 3, 4))
            cap = max_total_edges // k
            parts = []
            for _ in range(k):
                n = rng.randint(1, max_part_n)
                p = random_connected_graph(rng, n, cap)
                parts.append((p, rng.randrange(n)))
            yield check_compositional(parts, "identify")


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass
class InvariantReport:
    graph6: str | None
    n: int
    m: int
    fields: dict

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "n": self.n, "m": self.m, **self.fields}


def _safe_graph6(g: Graph) -> str | None:
    try:
        return encode_graph6(g)
    except PardualError:
        return None


def invariant_fields(inv: Invariants, oracle: bool = False) -> dict:
    """Every invariant of the bundle; a field that cannot be computed
    holds ``{"error": message}`` instead of aborting the report."""
    out: dict = {}

    def put(name, fn):
        try:
            out[name] = fn()
        except (CapacityError, PardualError) as exc:
            out[name] = {"error": str(exc)}

    n1, n2, delta = inv.degree_counts
    out.update(connected=inv.connected, beta=inv.beta, n1=n1, n2=n2, min_degree=delta)
    put("lambda", lambda: inv.lam)
    put("planar", lambda: inv.planar)
    put("xi", lambda: inv.xuong.value)
    put("xi_tree", lambda: inv.xuong.witness.tree_edges.indices())
    put("xi_nebesky", lambda: inv.nebesky.value)
    put("xi_nebesky_A", lambda: inv.nebesky.witness.indices())
    put("x", lambda: inv.decay.value)
    put("x_tree", lambda: inv.decay.witness.tree_edges.indices())
    put("y", lambda: inv.y.value)
    put("y_A", lambda: inv.y.witness.indices())
    put("gamma_M", lambda: inv.gamma_m)
    put("chi_complement", lambda: inv.chi_c)
    put("clique_partition", lambda: [sorted(c) for c in inv.cliques.classes])
    if inv.connected and inv.planar:
        put("pdg", lambda: inv.pdg_formula)
        if oracle:
            put("pdg_enumerated", lambda: inv.pdg_oracle)
    return out


def full_report(g: Graph, theorems=None, oracle: bool = False, **kw):
    """``(InvariantReport, checks, skipped)`` for one graph."""
    inv = Invariants(g, **kw)
    tids = resolve_theorems(theorems)
    if not oracle:
        tids = [t for t in tids if t != "T1.3-oracle"]
    checks, skipped = run_checks(inv, tids)
    rep = InvariantReport(_safe_graph6(g), g.n, g.m, invariant_fields(inv, oracle))
    return rep, checks, skipped


@dataclass
class ScanReport:
    corpus: str
    seed: int | None
    theorems: list
    graphs: int = 0
    checked: int = 0
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0
    skipped: int = 0
    per_theorem: dict = field(default_factory=dict)
    tight: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    skipped_graphs: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    rows: list | None = None

    @property
    def proven_failures(self) -> int:
        return len(self.failures)

    def _theorem(self, tid):
        return self.per_theorem.setdefault(tid, {
            "checked": 0, "passed": 0, "failed": 0, "not_applicable": 0, "skipped": 0,
            "tight": 0, "min_slack": None})

    def add(self, graph6: str | None, checks: list[BoundCheck], skipped: list[dict],
            report: dict | None = None):
        self.graphs += 1
        for c in checks:
            t = self._theorem(c.theorem_id)
            self.checked += 1
            t["checked"] += 1
            if not c.applicable:
                self.not_applicable += 1
                t["not_applicable"] += 1
            elif c.passed:
                self.passed += 1
                t["passed"] += 1
            else:
                self.failed += 1
                t["failed"] += 1
                entry = {"graph6": graph6, "check": c.to_dict(), "invariants": report}
                (self.findings if c.theorem_id == "Conj4" else self.failures).append(entry)
            if c.applicable:
                if t["min_slack"] is None or c.slack < t["min_slack"]:
                    t["min_slack"] = c.slack
                if c.tight:
                    t["tight"] += 1
                    lst = self.tight.setdefault(c.theorem_id, [])
                    if len(lst) < TIGHT_LIST_LIMIT and graph6 not in lst:
                        lst.append(graph6)
            if self.rows is not None:
                self.rows.append([graph6, c.theorem_id, c.applicable, c.lhs, c.rhs, c.slack, c.passed])
        for s in skipped:
            self.skipped += 1
            self._theorem(s["theorem_id"])["skipped"] += 1
        if skipped:
            self.skipped_graphs.append({"graph6": graph6, "skipped": skipped})
        for c in checks:
            if c.theorem_id == "T3.2" and c.applicable:
                key = f"T3.2_chi_branch_min_slack_lambda{c.witness_data['lambda']}"
                cur = self.extras.get(key)
                s = c.witness_data["chi_slack"]
                self.extras[key] = s if cur is None else min(cur, s)

    def to_dict(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if k != "rows"}
        d["per_theorem"] = {t: self.per_theorem[t] for t in THEOREM_IDS if t in self.per_theorem}
        d["tight"] = {t: self.tight[t] for t in THEOREM_IDS if t in self.tight}
        d["extras"] = dict(sorted(self.extras.items()))
        d["proven_failures"] = self.proven_failures
        return d

    def csv_rows(self) -> list[list]:
        return [["graph6", "theorem_id", "applicable", "lhs", "rhs", "slack", "pass"]] + (self.rows or [])


def _evaluate(job):
    g, tids, kw, oracle = job
    inv = Invariants(g, **kw)
    checks, skipped = run_checks(inv, tids)
    report = None
    if any(c.applicable and not c.passed for c in checks):
        report = InvariantReport(_safe_graph6(g), g.n, g.m, invariant_fields(inv, oracle)).to_dict()
    return _safe_graph6(g), checks, skipped, report


def scan(corpus: Iterable[Graph], theorems=None, description: str = "", seed: int | None = None,
         parallel: int = 1, keep_rows: bool = False, **kw) -> ScanReport:
    """Run the selected checks over a corpus.  Results are reduced in
    corpus order, so the report does not depend on ``parallel``."""
    tids = resolve_theorems(theorems)
    oracle = "T1.3-oracle" in tids
    rep = ScanReport(description, seed, tids, rows=[] if keep_rows else None)
    kw = {"seed": seed or 0, **kw}
    jobs = ((g, tids, kw, oracle) for g in corpus)
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            for res in pool.map(_evaluate, jobs, chunksize=16):
                rep.add(*res)
    else:
        for res in map(_evaluate, jobs):
            rep.add(*res)
    return rep


def scan_conjecture(corpus: Iterable[Graph], description: str = "", seed: int | None = None,
                    parallel: int = 1, **kw) -> ScanReport:
    """Evaluate the conjectured clique-cover bound alongside the proven
    one on every graph."""
    return scan(corpus, ["Conj4", "T3.2"], description, seed, parallel, **kw)


def catalog_P33(max_edges: int = DEFAULT_MAX_EDGES) -> list[tuple[str, list[BoundCheck]]]:
    """The tensor statement on every catalog base, within capacity."""
    out = []
    for name, h in catalog_cubic_3ec_planar():
        g = tensor_kt(h, 3)
        out.append((name, check_P33(Invariants(g, max_edges=max_edges))))
    return out
