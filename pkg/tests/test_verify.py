import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from pardual.checks import THEOREM_IDS
from pardual.corpus import atlas_connected
from pardual.errors import CapacityError
from pardual.families import catalog_graph, complete, cycle, fig1_G, fig1_Gprime, path, star, tensor_kt
from pardual.graph import Graph, encode_graph6
from pardual.verify import (CHECKS, PROVEN_IDS, Invariants, ScanReport, catalog_P33,
                            check_C17, check_compositional, check_conj4, check_L21, check_L22,
                            check_L25, check_P24, check_P33, check_P41, check_prior_bounds,
                            check_T11, check_T13_oracle, check_T14, check_T16, check_T18,
                            check_T26, check_T31, check_T32, claims3_violations, full_report,
                            random_compositional, resolve_theorems, run_checks, scan,
                            scan_conjecture, tensor_k3_base)

K4K3 = tensor_kt(complete(4), 3)


class TestInvariants:
    def test_k4_bundle(self):
        inv = Invariants(complete(4))
        assert (inv.beta, inv.xuong.value, inv.decay.value, inv.y.value) == (3, 1, 1, 1)
        assert (inv.gamma_m, inv.lam, inv.chi_c, inv.pdg_formula) == (1, 3, 1, 3)
        assert inv.pdg_oracle == [3, 3]

    def test_guard(self):
        inv = Invariants(complete(8), max_edges=20)
        with pytest.raises(CapacityError):
            inv.y
        assert inv.beta == 21

    def test_cubic_decay_is_unguarded(self):
        inv = Invariants(tensor_kt(catalog_graph("cube"), 3), max_edges=10)
        assert inv.decay.value == 11

    def test_report_records_field_errors(self):
        rep, checks, skipped = full_report(complete(8), max_edges=20)
        assert rep.fields["y"] == {"error": rep.fields["y"]["error"]}
        assert skipped and all("reason" in s for s in skipped)
        assert rep.fields["beta"] == 21


class TestPointChecks:
    def test_consistency(self):
        c, cap = check_T11(complete(4))
        assert c.passed and (c.lhs, c.rhs) == (3, 3)
        assert c.witness_data["upper_embeddable"]
        assert cap.passed and cap.tight

    def test_oracle_k4(self):
        cs = check_T13_oracle(complete(4))
        assert len(cs) == 2 and all(c.passed and c.rhs == 3 for c in cs)
        assert not check_T13_oracle(complete(5))[0].applicable

    def test_t14_fig1(self):
        assert check_T14(fig1_G()).lhs == 1 and check_T14(fig1_Gprime()).lhs == 2

    @pytest.mark.parametrize("g", [path(6), cycle(6), star(5)])
    def test_t31_tight(self, g):
        c = check_T31(g)
        assert c.passed and c.tight and c.scale == 2

    def test_t16(self):
        c = check_T16(complete(4))
        assert c.passed and (c.lhs, c.rhs) == (6, 6)
        assert not check_T16(Graph(1)).applicable
        assert not check_T16(complete(5)).applicable

    def test_c17_tight_at_truncated_tetrahedron(self):
        c = check_C17(K4K3)
        assert c.passed and c.tight
        assert not check_C17(cycle(5)).applicable

    @pytest.mark.parametrize("g,lam", [(catalog_graph("prism"), 3), (catalog_graph("cube"), 3),
                                       (K4K3, 3), (cycle(6), 2)])
    def test_t18_tight(self, g, lam):
        c = check_T18(g)
        assert c.passed and c.tight and c.witness_data["lambda"] == lam

    def test_t18_exclusions(self):
        assert check_T18(complete(4)).note == "K_4 excluded"
        assert not check_T18(complete(5)).applicable

    @pytest.mark.parametrize("g", [catalog_graph("prism"), catalog_graph("cube"), K4K3])
    def test_t32_tight_lambda3(self, g):
        c = check_T32(g)
        assert c.passed and c.tight and c.witness_data["lambda"] == 3

    def test_t32_examples(self):
        c = check_T32(cycle(6))
        assert c.passed and (c.lhs, c.witness_data["order_bound"], c.witness_data["chi_bound"]) == (5, 5, 8)
        assert not check_T32(complete(5)).applicable
        assert not check_T32(complete(3)).applicable

    def test_p24(self):
        cs = check_P24(complete(6))
        assert len(cs) == 2 and all(c.passed for c in cs)
        assert not check_P24(complete(4))[0].applicable

    def test_t26(self):
        for name in ("k4", "prism", "cube"):
            c = check_T26(catalog_graph(name))
            assert c.passed and c.relation == "=="
        assert not check_T26(cycle(5)).applicable

    def test_l25(self):
        assert check_L25(cycle(6)).tight
        assert not check_L25(complete(4)).applicable

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_p41(self, n):
        c = check_P41(path(n))
        assert c.passed and c.lhs == n
        if n >= 4:
            c = check_P41(cycle(n))
            assert c.passed and c.lhs == n - 1
        assert not check_P41(path(n + 1)).applicable

    def test_conj4(self):
        for g in (path(4), cycle(6), path(6)):
            c = check_conj4(g)
            assert c.passed and c.tight
        assert not check_conj4(complete(3)).applicable
        assert not check_conj4(complete(4)).applicable

    def test_prior_bounds(self):
        ck, huang = check_prior_bounds(K4K3)
        assert ck.passed and ck.scale == 4
        assert huang.passed and huang.scale == 2
        ck, huang = check_prior_bounds(path(3))
        assert not ck.applicable and huang.passed

    def test_l21_and_l22(self):
        c = check_L21(fig1_G())
        assert c.passed and c.witness_data["side_y"] == [1, 1] and c.lhs == 1
        c = check_L21(fig1_Gprime())
        assert c.passed and c.lhs == 2
        c = check_L22(star(5))
        assert c.passed and c.witness_data["part_y"] == [2, 2, 2, 2]
        assert not check_L22(cycle(5)).applicable
        assert not check_L21(complete(4)).applicable

    def test_claims3_violations(self):
        g = cycle(4)
        # deleting (0,1) and (2,3): classes {0,1} and {2,3} each straddle two components
        mask = 1 << g.index_of(0, 1) | 1 << g.index_of(2, 3)
        bad = claims3_violations(g, mask, [frozenset({0, 1}), frozenset({2, 3})])
        assert bad == []
        bad = claims3_violations(g, mask, [frozenset({0, 3, 1}), frozenset({2})])
        assert any(b["claim"] == 1 for b in bad)


class TestTensorStatement:
    def test_detects_base(self):
        h = tensor_k3_base(Invariants(K4K3))
        assert h is not None and (h.n, h.m) == (4, 6)
        assert tensor_k3_base(Invariants(catalog_graph("cube"))) is None

    def test_k4k3(self):
        cs = check_P33(K4K3)
        assert len(cs) == 3 and all(c.passed for c in cs)

    def test_catalog(self):
        results = dict(catalog_P33())
        assert set(results) == {"k4", "prism", "cube", "pentagonal_prism", "dodecahedron"}
        for name, checks in results.items():
            assert all(c.passed for c in checks), name

    def test_not_applicable_elsewhere(self):
        assert not check_P33(catalog_graph("prism"))[0].applicable


class TestRegistry:
    def test_ids(self):
        assert tuple(CHECKS) == THEOREM_IDS
        assert "Conj4" not in PROVEN_IDS

    def test_resolve(self):
        assert resolve_theorems("all") == list(THEOREM_IDS)
        assert resolve_theorems("T1.4, T3.1") == ["T1.4", "T3.1"]
        with pytest.raises(ValueError):
            resolve_theorems("T9.9")

    def test_disconnected_not_applicable(self):
        checks, skipped = run_checks(Invariants(Graph(3, [(0, 1)])), PROVEN_IDS)
        assert checks and all(not c.applicable for c in checks) and not skipped


class TestCompositional:
    def test_identify(self):
        c = check_compositional([(complete(4), 0), (complete(4), 3)], "identify")
        assert c.passed and c.lhs == 1
        c = check_compositional([(path(2), 0)] * 3, "identify")
        assert c.passed and c.lhs == 4

    def test_cut_join(self):
        c = check_compositional((complete(4), complete(4)), "cut_join", [(1, 0), (2, 2)])
        assert c.passed and c.lhs == 1 and c.witness_data["graph6"] == encode_graph6(fig1_G())

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            check_compositional([], "glue")

    def test_random_batch(self):
        checks = list(random_compositional(60, seed=7))
        assert len(checks) == 60 and all(c.passed for c in checks)
        assert {c.theorem_id for c in checks} == {"L2.1", "L2.2"}

    @settings(max_examples=30)
    @given(connected_graphs(max_n=6, max_m=9), connected_graphs(max_n=6, max_m=9))
    def test_cut_join_sum_rule(self, a, b):
        assert check_compositional((a, b), "cut_join", [(0, 0)]).passed
        assert check_compositional([(a, 0), (b, 0)], "identify").passed


class TestScan:
    def test_counts_balance(self):
        rep = scan(atlas_connected(5), theorems=["T3.1", "T1.8", "Conj4", "P4.1"])
        assert rep.graphs == 1 + 1 + 2 + 6 + 21
        assert rep.checked == rep.passed + rep.failed + rep.not_applicable
        for t in rep.per_theorem.values():
            assert t["checked"] == t["passed"] + t["failed"] + t["not_applicable"]
        assert rep.proven_failures == 0 and not rep.findings

    def test_tight_lists_contain_named_witnesses(self):
        rep = scan([path(4), cycle(6), star(5), complete(4)], theorems=["T3.1"])
        assert set(rep.tight["T3.1"]) >= {encode_graph6(g) for g in (path(4), cycle(6), star(5))}

    def test_rows_and_dict(self):
        rep = scan([cycle(4)], theorems=["T1.4"], keep_rows=True, seed=5)
        d = rep.to_dict()
        assert d["seed"] == 5 and d["proven_failures"] == 0 and "rows" not in d
        assert rep.csv_rows()[0][0] == "graph6" and len(rep.csv_rows()) == 2

    def test_skips_recorded(self):
        rep = scan([complete(8)], theorems=["T1.4"], max_edges=20)
        assert rep.skipped == 1 and rep.skipped_graphs[0]["skipped"][0]["theorem_id"] == "T1.4"

    def test_failures_routed(self):
        rep = ScanReport("x", None, ["Conj4"])
        from pardual.checks import leq
        rep.add("A_", [leq("Conj4", 2, 1)], [])
        rep.add("A_", [leq("T3.1", 2, 1)], [])
        assert len(rep.findings) == 1 and rep.proven_failures == 1

    def test_parallel_matches_serial(self):
        graphs = list(atlas_connected(5))
        a = scan(graphs, theorems=["T1.4", "T3.2"], parallel=1).to_dict()
        b = scan(graphs, theorems=["T1.4", "T3.2"], parallel=2).to_dict()
        assert a == b

    def test_conjecture_scan(self):
        rep = scan_conjecture(atlas_connected(5))
        assert rep.theorems == ["Conj4", "T3.2"]
        assert "T3.2_chi_branch_min_slack_lambda1" in rep.extras
