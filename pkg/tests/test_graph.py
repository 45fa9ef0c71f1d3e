import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_chromatic, brute_edge_connectivity, has_kuratowski_minor
from pardual.corpus import atlas_connected, atlas_connected_graphs
from pardual.errors import CapacityError, Graph6Error, GraphFormatError, HostMismatchError
from pardual.families import catalog_graph, complete, cycle, path, star, tensor_kt
from pardual.graph import (EdgeSubset, Graph, betti, chromatic_number, chromatic_number_ie,
                           clique_partition, complement, components, degree_counts,
                           edge_connectivity, encode_edgelist, encode_graph6, is_planar,
                           parse_edgelist, parse_graph6, read_graph6_lines,
                           spanning_subgraph_minus)


def all_atlas(max_n=7):
    import networkx as nx
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= max_n:
            yield Graph(h.number_of_nodes(), [tuple(sorted(e)) for e in h.edges()])


class TestGraphType:
    def test_edges_sorted_and_normalized(self):
        g = Graph(3, [(2, 1), (0, 2)])
        assert g.edges == ((0, 2), (1, 2))

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            Graph(3, edges)

    def test_edge_subset_bits_in_range(self):
        g = path(3)
        with pytest.raises(ValueError):
            EdgeSubset(g, 0b100)
        assert EdgeSubset.from_edges(g, [(1, 2)]).indices() == [1]


class TestGraph6:
    @pytest.mark.parametrize("text,n,edges", [
        ("@", 1, ()),
        ("A_", 2, ((0, 1),)),
        ("C~", 4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    ])
    def test_decode(self, text, n, edges):
        g = parse_graph6(text)
        assert (g.n, g.edges) == (n, edges)

    def test_encode_examples(self):
        assert encode_graph6(complete(4)) == "C~"
        assert encode_graph6(Graph(1)) == "@"
        p3 = encode_graph6(path(3))
        assert len(p3) == 2 and parse_graph6(p3) == path(3)

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<C~") == complete(4)

    @pytest.mark.parametrize("text,offset", [("C~x", 2), ("C\x07", 1), ("C", 1), ("\x7f", 0)])
    def test_errors_name_offset(self, text, offset):
        with pytest.raises(Graph6Error) as info:
            parse_graph6(text)
        assert info.value.offset == offset
        assert f"offset {offset}" in str(info.value)

    def test_large_n_rejected(self):
        with pytest.raises(CapacityError):
            encode_graph6(Graph(63))
        with pytest.raises(Graph6Error):
            parse_graph6("~??~")  # long-form header announces n > 62

    def test_batch_skips_blank_lines(self):
        got = list(read_graph6_lines(["C~", "", "  ", "A_"]))
        assert [(i, g.n) for i, g in got] == [(1, 4), (4, 2)]

    def test_batch_reports_line(self):
        with pytest.raises(Graph6Error, match="line 2"):
            list(read_graph6_lines(["C~", "C~~"]))

    @given(graphs(max_n=12))
    def test_round_trip(self, g):
        assert parse_graph6(encode_graph6(g)) == g

    def test_round_trip_full_atlas(self):
        for g in all_atlas():
            assert parse_graph6(encode_graph6(g)) == g

    def test_matches_networkx_codec(self):
        import networkx as nx
        for g in list(all_atlas(6))[::7]:
            h = nx.empty_graph(g.n)
            h.add_edges_from(g.edges)
            assert encode_graph6(g) == nx.to_graph6_bytes(h, header=False).decode().strip()
            assert sorted(nx.from_graph6_bytes(encode_graph6(g).encode()).edges()) == list(g.edges)


class TestEdgeList:
    def test_round_trip(self):
        g = cycle(5)
        assert parse_edgelist(encode_edgelist(g)) == g

    @pytest.mark.parametrize("text", ["", "2 1", "2 1\n0 2", "2 2\n0 1\n0 1", "x y"])
    def test_errors(self, text):
        with pytest.raises(GraphFormatError):
            parse_edgelist(text)


class TestBasicInvariants:
    def test_components(self):
        assert components(complete(4)) == [frozenset(range(4))]
        assert len(components(Graph(3))) == 3
        c4_minus = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert len(components(c4_minus)) == 1

    def test_betti(self):
        assert betti(complete(4)) == 3
        assert betti(star(6)) == 0
        assert betti(cycle(5)) == 1

    def test_degree_counts(self):
        assert degree_counts(path(4)) == (2, 2, 1)
        assert degree_counts(cycle(6)) == (0, 6, 2)
        assert degree_counts(complete(4)) == (0, 0, 3)

    def test_complement(self):
        assert complement(complete(4)).m == 0
        c5 = complement(cycle(5))
        assert c5.m == 5 and all(d == 2 for d in c5.degrees)
        p3c = complement(path(3))
        assert p3c.edges == ((0, 2),)

    def test_spanning_subgraph_minus(self):
        assert spanning_subgraph_minus(cycle(4), EdgeSubset.full(cycle(4))) == Graph(4)
        assert spanning_subgraph_minus(complete(4), 0) == complete(4)
        assert spanning_subgraph_minus(path(3), [0, 1]) == Graph(3)

    def test_host_mismatch(self):
        with pytest.raises(HostMismatchError):
            spanning_subgraph_minus(cycle(4), EdgeSubset.full(path(4)))

    @given(graphs(max_n=9))
    def test_betti_nonnegative_and_forest(self, g):
        b = betti(g)
        assert b >= 0
        assert (b == 0) == (g.m == g.n - len(components(g)))
        assert sum(g.degrees) == 2 * g.m
        n1, n2, delta = degree_counts(g)
        assert n1 == sum(1 for d in g.degrees if d == 1)
        assert n2 == sum(1 for d in g.degrees if d == 2)
        assert delta == min(g.degrees)


class TestChromatic:
    def test_examples(self):
        assert chromatic_number(Graph(5))[0] == 1
        for n in (2, 4, 6, 8, 10, 12):
            assert chromatic_number(complement(path(n)))[0] == n // 2
        assert chromatic_number(complement(cycle(6)))[0] == 3

    def test_against_brute_force_atlas(self):
        for g in all_atlas(7):
            chi, col = chromatic_number(g)
            assert chi == brute_chromatic(g)
            assert len(set(col.values())) == chi
            assert all(col[u] != col[v] for u, v in g.edges)

    @given(graphs(min_n=1, max_n=11))
    def test_inclusion_exclusion_agrees(self, g):
        assert chromatic_number(g)[0] == chromatic_number_ie(g)

    def test_capacity(self):
        import random
        rng = random.Random(3)
        # dense random graph on 40 vertices: no certificate within a tiny budget
        pairs = [(u, v) for u in range(40) for v in range(u + 1, 40) if rng.random() < 0.5]
        with pytest.raises(CapacityError):
            chromatic_number(Graph(40, pairs), budget=50)
        with pytest.raises(CapacityError):
            chromatic_number_ie(Graph(17))

    def test_certified_beyond_exact_range(self):
        g = tensor_kt(catalog_graph("cube"), 3)  # 24 vertices
        assert chromatic_number(complement(g))[0] == 8


class TestCliquePartition:
    def test_examples(self):
        assert clique_partition(complete(4)).classes == (frozenset(range(4)),)
        c6 = clique_partition(cycle(6))
        assert len(c6) == 3 and all(len(c) == 2 for c in c6.classes)
        prism = clique_partition(catalog_graph("prism"))
        assert sorted(map(len, prism.classes)) == [3, 3]

    @given(graphs(max_n=9))
    def test_classes_are_cliques_covering(self, g):
        cp = clique_partition(g)
        seen = set()
        for c in cp.classes:
            assert not seen & c
            seen |= c
            assert all(g.has_edge(u, v) for u in c for v in c if u < v)
        assert seen == set(range(g.n))
        assert len(cp) == chromatic_number(complement(g))[0]


class TestEdgeConnectivity:
    def test_examples(self):
        assert edge_connectivity(complete(4)) == 3
        assert edge_connectivity(path(5)) == 1
        assert edge_connectivity(cycle(6)) == 2
        assert edge_connectivity(Graph(3, [(0, 1)])) == 0
        assert edge_connectivity(Graph(1)) == 0

    def test_complete_graphs(self):
        for n in range(2, 9):
            assert edge_connectivity(complete(n)) == n - 1

    def test_against_brute_force(self):
        for g in all_atlas(6):
            lam = edge_connectivity(g)
            assert lam == brute_edge_connectivity(g)
            if g.n > 1:
                assert lam <= min(g.degrees)


class TestPlanarity:
    def test_examples(self):
        assert is_planar(complete(4))
        assert not is_planar(complete(5))
        g = tensor_kt(complete(4), 3)
        assert (g.n, g.m) == (12, 18) and is_planar(g)

    def test_known_counts(self):
        # connected planar graphs on n vertices, up to isomorphism
        expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 20, 6: 99, 7: 646}
        for n, want in expected.items():
            assert sum(is_planar(g) for g in atlas_connected_graphs(n)) == want

    def test_against_wagner_minors(self):
        for g in atlas_connected(7, min_n=5):
            if g.m <= 3 * g.n - 6:  # otherwise the Euler filter alone decides
                assert is_planar(g) == (not has_kuratowski_minor(g.n, g.edges)), g
            else:
                assert not is_planar(g)
