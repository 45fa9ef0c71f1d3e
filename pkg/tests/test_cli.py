import io
import json

import pytest

from pardual.cli import main
from pardual.families import complete, cycle, fig1_G, tensor_kt
from pardual.graph import encode_graph6, parse_edgelist


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestInvariants:
    def test_k4_json(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["invariants", "--in", "-"], "C~\n")
        doc = json.loads(out)
        assert code == 0 and len(doc) == 1
        inv = doc[0]["invariants"]
        assert (inv["y"], inv["x"], inv["xi"], inv["gamma_M"], inv["pdg"]) == (1, 1, 1, 1, 3)
        assert all(c["pass"] for c in doc[0]["checks"])

    def test_edgelist_input(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["invariants", "--format", "edgelist", "--in", "-"],
                           "2 1\n0 1\n")
        assert code == 0 and json.loads(out)[0]["invariants"]["y"] == 2

    def test_oracle_and_csv(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch,
                           ["invariants", "--oracle", "--theorem", "T1.3-oracle", "--out", "csv", "--in", "-"],
                           "C~\n")
        lines = out.strip().splitlines()
        assert code == 0 and lines[0].startswith("graph6,theorem_id") and len(lines) == 3

    def test_human(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["invariants", "--out", "human", "--in", "-"], "C~\n")
        assert code == 0 and "C~" in out

    def test_file_and_errors(self, capsys, monkeypatch, tmp_path):
        assert run(capsys, monkeypatch, ["invariants", "--in", str(tmp_path / "none.g6")])[0] == 2
        bad = tmp_path / "bad.g6"
        bad.write_text("C~\nC~x\n")
        code, _, err = run(capsys, monkeypatch, ["invariants", "--in", str(bad)])
        assert code == 2 and "line 2" in err and "offset 2" in err
        assert run(capsys, monkeypatch, ["invariants", "--theorem", "X", "--in", "-"], "C~\n")[0] == 2
        assert run(capsys, monkeypatch, ["bogus"])[0] == 2

    def test_capacity_limits(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["invariants", "--max-edges", "99", "--in", "-"], "C~\n")
        assert code == 2
        monkeypatch.setenv("PARDUAL_MAX_EDGES", "30")
        code, _, err = run(capsys, monkeypatch, ["invariants", "--in", "-"], "C~\n")
        assert code == 0 and "warning" in err


class TestVerify:
    def test_exhaustive_passes(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "--exhaustive-n", "4", "--theorem", "T1.4"])
        doc = json.loads(out)
        assert code == 0 and doc["proven_failures"] == 0 and doc["passed"] == doc["checked"]

    def test_compositional(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "--theorem", "T3.1", "--compositional", "10"])
        doc = json.loads(out)
        assert code == 0 and doc["per_theorem"]["L2.1"]["passed"] + doc["per_theorem"]["L2.2"]["passed"] == 10

    def test_max_n_limit(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["verify", "--max-n", "8"])[0] == 2

    def test_parallel_output_identical(self, capsys, monkeypatch):
        argv = ["verify", "--max-n", "5", "--random", "20", "--orders", "6,7", "--theorem", "T1.4,T3.1,T3.2"]
        _, a, _ = run(capsys, monkeypatch, argv + ["--parallel", "1"])
        _, b, _ = run(capsys, monkeypatch, argv + ["--parallel", "2"])
        assert a == b

    def test_csv_rows(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "--max-n", "3", "--theorem", "T3.1", "--out", "csv"])
        assert code == 0 and len(out.strip().splitlines()) == 1 + 4


class TestScanConjecture:
    def test_small_corpus(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["scan-conjecture", "--max-n", "5"])
        doc = json.loads(out)
        assert code == 0 and doc["findings"] == [] and doc["per_theorem"]["T3.2"]["failed"] == 0


class TestConstruct:
    @pytest.mark.parametrize("argv,expected", [
        (["--family", "tensor", "--base", "k4", "--t", "3"], tensor_kt(complete(4), 3)),
        (["--family", "fig1_G"], fig1_G()),
        (["--family", "cycle", "--n", "6"], cycle(6)),
    ])
    def test_graph6(self, capsys, monkeypatch, argv, expected):
        code, out, _ = run(capsys, monkeypatch, ["construct", *argv])
        assert code == 0 and out.strip() == encode_graph6(expected)

    def test_identify_and_cut_join(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["construct", "--family", "identify", "--parts", "A_,A_,A_"])
        assert code == 0 and out.strip() == encode_graph6(parse_edgelist("4 3\n0 1\n0 2\n0 3\n"))
        code, out, _ = run(capsys, monkeypatch, ["construct", "--family", "cut_join", "--parts", "C~,C~",
                                                 "--cross", "1:0,2:2"])
        assert code == 0 and out.strip() == encode_graph6(fig1_G())

    def test_edgelist_format(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["construct", "--family", "path", "--n", "3",
                                                 "--format", "edgelist"])
        assert code == 0 and parse_edgelist(out).m == 2

    @pytest.mark.parametrize("argv", [["--family", "tensor", "--base", "k4", "--t", "2"],
                                      ["--family", "cycle"],
                                      ["--family", "cut_join", "--parts", "C~"],
                                      ["--family", "cut_join", "--parts", "C~,C~", "--cross", "1-0"]])
    def test_errors(self, capsys, monkeypatch, argv):
        assert run(capsys, monkeypatch, ["construct", *argv])[0] == 2


class TestPartialDuals:
    def test_k4(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["partial-duals", "--in", "-"], "C~\n")
        doc = json.loads(out)
        assert code == 0 and doc["max_genus"] == 3 and doc["agrees"]
        assert doc["histogram"] == {"0": 2, "1": 12, "2": 38, "3": 12}
        assert len(doc["embeddings"]) == 2

    def test_csv(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["partial-duals", "--out", "csv", "--in", "-"], "C~\n")
        assert code == 0 and out.splitlines()[0] == "genus,count" and len(out.splitlines()) == 5

    def test_given_embedding(self, capsys, monkeypatch, tmp_path):
        # K5 has no plane embedding; a user rotation is still enumerated
        rot = tmp_path / "k5.rot"
        rot.write_text("0: 0 1 2 3\n1: 0 4 5 6\n2: 1 4 7 8\n3: 2 5 7 9\n4: 3 6 8 9\n")
        code, out, _ = run(capsys, monkeypatch, ["partial-duals", "--embedding", str(rot), "--in", "-"], "D~{\n")
        doc = json.loads(out)
        assert code == 0 and doc["planar"] is False and doc["agrees"] is None

    def test_non_planar_without_embedding(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["partial-duals", "--in", "-"], "D~{\n")
        assert code == 2 and "planar" in err

    def test_capacity(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["partial-duals", "--max-dual-edges", "4", "--in", "-"], "C~\n")
        assert code == 2 and "capacity" in err
