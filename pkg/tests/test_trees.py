import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from oracles import (brute_decay, brute_xuong, n_components, spanning_tree_count_matrix_tree,
                     spanning_trees)
from pardual.corpus import atlas_connected
from pardual.errors import DomainError
from pardual.families import catalog_graph, complete, cycle, path, star, tensor_kt
from pardual.graph import Graph, betti, edge_connectivity
from pardual.trees import (count_spanning_trees, cotree_components, decay_number,
                           enumerate_spanning_trees, is_upper_embeddable, max_genus,
                           odd_cotree_components, xuong_deficiency)


def first_optimal_tree(g, objective):
    best = None
    for t in spanning_trees(g):  # lexicographic order of index tuples
        val = objective(g, t)
        if best is None or val < best[0]:
            best = (val, t)
    return best


def cotree_count(g, t):
    ts = set(t)
    return n_components(g.n, [e for i, e in enumerate(g.edges) if i not in ts])


def cotree_odd(g, t):
    mask = sum(1 << i for i in t)
    return odd_cotree_components(g, mask)


class TestSpanningTrees:
    @pytest.mark.parametrize("g,count", [(complete(4), 16), (cycle(4), 4), (path(5), 1),
                                         (complete(5), 125), (Graph(1), 1)])
    def test_counts(self, g, count):
        assert count_spanning_trees(g) == count

    def test_enumeration_lexicographic_and_complete(self):
        g = catalog_graph("prism")
        got = [tuple(t.tree_edges.indices()) for t in enumerate_spanning_trees(g)]
        assert got == list(spanning_trees(g))
        assert len(got) == spanning_tree_count_matrix_tree(g) == 75

    @given(connected_graphs(max_n=7, max_m=12))
    def test_count_matches_kirchhoff(self, g):
        assert count_spanning_trees(g) == spanning_tree_count_matrix_tree(g)

    def test_cotree_is_complement(self):
        t = next(enumerate_spanning_trees(cycle(4)))
        assert t.cotree.indices() == [3]


class TestDecay:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycle_and_star(self, n):
        # G - E(T) is spanning: the cotree of C_n is one edge on n vertices
        assert decay_number(cycle(n)).value == n - 1
        assert decay_number(star(n)).value == n
        assert decay_number(path(n)).value == n

    def test_cubic_catalog(self):
        for name in ("k4", "prism", "cube", "pentagonal_prism", "dodecahedron"):
            g = catalog_graph(name)
            assert decay_number(g).value == g.n // 2 - 1

    def test_cubic_tensor(self):
        g = tensor_kt(catalog_graph("cube"), 3)
        assert decay_number(g).value == g.n // 2 - 1

    @settings(max_examples=80)
    @given(connected_graphs(max_n=7, max_m=12))
    def test_against_brute_force_with_witness(self, g):
        res = decay_number(g)
        val, tree = first_optimal_tree(g, cotree_count)
        assert res.value == val == brute_decay(g)
        assert tuple(res.witness.tree_edges.indices()) == tree
        assert cotree_components(g, res.witness.tree_edges.bits) == res.value

    def test_four_edge_connected_is_one(self):
        for g in (complete(5), complete(6), complete(7)):
            assert edge_connectivity(g) >= 4
            assert decay_number(g).value == 1

    def test_disconnected(self):
        with pytest.raises(DomainError):
            decay_number(Graph(2))


class TestXuong:
    @settings(max_examples=80)
    @given(connected_graphs(max_n=7, max_m=12))
    def test_against_brute_force_with_witness(self, g):
        res = xuong_deficiency(g)
        val, tree = first_optimal_tree(g, cotree_odd)
        assert res.value == val == brute_xuong(g)
        assert tuple(res.witness.tree_edges.indices()) == tree
        assert (betti(g) - res.value) % 2 == 0 and res.value >= 0

    def test_atlas_parity_and_genus(self):
        for g in atlas_connected(6):
            xi = xuong_deficiency(g).value
            assert (betti(g) - xi) % 2 == 0
            assert max_genus(g) == (betti(g) - xi) // 2

    @pytest.mark.parametrize("g,genus", [(complete(4), 1), (complete(5), 3), (cycle(5), 0),
                                         (star(4), 0), (catalog_graph("prism"), 2)])
    def test_max_genus_examples(self, g, genus):
        assert max_genus(g) == genus

    def test_upper_embeddable(self):
        assert is_upper_embeddable(complete(4))
        assert is_upper_embeddable(tensor_kt(complete(4), 3))

    def test_disconnected(self):
        with pytest.raises(DomainError):
            xuong_deficiency(Graph(3, [(0, 1)]))
