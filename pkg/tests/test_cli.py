import json

import pytest

from weakiasi.cli import (
    EXIT_CAPACITY,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    EXIT_VERIFY,
    export_dot,
    main,
)
from weakiasi.constructions import optimal_labeling
from weakiasi.graph_core import Graph, complete_graph, cycle_graph, path_graph
from weakiasi.set_label import IntegerSet, Labeling


@pytest.fixture
def graphs(tmp_path):
    paths = {}
    for name, g in [("k4", complete_graph(4)), ("c4", cycle_graph(4)),
                    ("p2", path_graph(2)), ("p3", path_graph(3))]:
        p = tmp_path / f"{name}.json"
        p.write_text(g.to_json())
        paths[name] = str(p)
    return paths


def read(path):
    return json.loads(open(path).read())


class TestBuild:
    def test_cartesian_build(self, graphs, tmp_path):
        out = tmp_path / "prod.json"
        code = main(["build", "--op", "cartesian", "--g1", graphs["p2"],
                     "--g2", graphs["p3"], "--out", str(out)])
        assert code == EXIT_OK
        payload = read(out)
        assert payload["n"] == 6
        assert len(payload["edges"]) == 7
        assert payload["vertex_map"]["order"].startswith("row-major")
        # artifact is re-ingestible
        Graph.from_json_dict(payload)

    def test_rooted_requires_root(self, graphs, tmp_path):
        code = main(["build", "--op", "rooted", "--g1", graphs["p2"],
                     "--g2", graphs["p2"], "--out", str(tmp_path / "x.json")])
        assert code == EXIT_USAGE

    def test_union(self, graphs, tmp_path):
        out = tmp_path / "u.json"
        code = main(["build", "--op", "union", "--g1", graphs["c4"],
                     "--g2", graphs["k4"], "--out", str(out)])
        assert code == EXIT_OK
        assert read(out)["n"] == 8

    def test_parse_error(self, graphs, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nonsense")
        code = main(["build", "--op", "cartesian", "--g1", str(bad),
                     "--g2", graphs["p2"], "--out", str(tmp_path / "x.json")])
        assert code == EXIT_PARSE

    def test_round_trip_normalization_is_stable(self, tmp_path):
        g = Graph(4, [(3, 2), (1, 0), (2, 0)], allow_isolated=True)
        p = tmp_path / "g.json"
        p.write_text(g.to_json())
        again = Graph.from_json(p.read_text(), allow_isolated=True)
        assert again.to_json() == g.to_json()


class TestSparing:
    def test_k4(self, graphs, tmp_path):
        out = tmp_path / "s.json"
        code = main(["sparing", "--graph", graphs["k4"], "--out", str(out)])
        assert code == EXIT_OK
        payload = read(out)
        assert payload["value"] == 3
        assert payload["method"] == "exact-oracle"
        assert payload["formula_value"] == 3  # recognized as complete

    def test_capacity_exit_code(self, tmp_path):
        g = cycle_graph(12)
        p = tmp_path / "c12.json"
        p.write_text(g.to_json())
        code = main(["sparing", "--graph", str(p), "--oracle-bound", "6",
                     "--out", str(tmp_path / "s.json")])
        assert code == EXIT_CAPACITY

    def test_oracle_bound_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("WEAKIASI_ORACLE_BOUND", "6")
        from weakiasi.sparing import oracle_bound_default
        assert oracle_bound_default() == 6


class TestVerify:
    def test_duplicate_vertex_label_exits_4(self, graphs, tmp_path):
        labels = tmp_path / "bad.json"
        labels.write_text(json.dumps(
            {"labels": {"0": [1], "1": [2], "2": [1], "3": [3]}}))
        out = tmp_path / "rep.json"
        code = main(["verify", "--graph", graphs["c4"], "--labels", str(labels),
                     "--out", str(out)])
        assert code == EXIT_VERIFY
        payload = read(out)
        assert not payload["passed"]
        assert any(v[0] == "duplicate-vertex-label" for v in payload["violations"])

    def test_good_labeling_passes(self, graphs, tmp_path):
        g = cycle_graph(4)
        lab = optimal_labeling(g)
        labels = tmp_path / "good.json"
        labels.write_text(lab.to_json())
        code = main(["verify", "--graph", graphs["c4"], "--labels", str(labels),
                     "--out", str(tmp_path / "rep.json")])
        assert code == EXIT_OK


class TestLabel:
    def test_label_then_verify_round_trip(self, graphs, tmp_path):
        out = tmp_path / "lab.json"
        code = main(["label", "--graph", graphs["k4"], "--out", str(out)])
        assert code == EXIT_OK
        payload = read(out)
        assert payload["report"]["passed"]
        # the labeling artifact feeds straight back into verify
        labels = tmp_path / "labels.json"
        labels.write_text(json.dumps(payload["labeling"]))
        code = main(["verify", "--graph", graphs["k4"], "--labels", str(labels),
                     "--out", str(tmp_path / "rep.json")])
        assert code == EXIT_OK

    def test_label_product(self, graphs, tmp_path):
        out = tmp_path / "lab.json"
        code = main(["label", "--op", "cartesian", "--g1", graphs["c4"],
                     "--g2", graphs["p2"], "--out", str(out)])
        assert code == EXIT_OK
        payload = read(out)
        assert payload["plan"]["provenance"] == "cartesian"
        assert payload["report"]["passed"]
        assert payload["report"]["mono_edge_count"] == 0  # bipartite x bipartite

    def test_label_usage_error(self, tmp_path):
        assert main(["label", "--out", str(tmp_path / "x.json")]) == EXIT_USAGE


class TestDot:
    def test_mono_edges_highlighted(self):
        g = complete_graph(4)
        lab = Labeling(g, {0: IntegerSet([9, 10]), 1: IntegerSet([1]),
                           2: IntegerSet([2]), 3: IntegerSet([4])})
        text = export_dot(g, lab)
        assert text.count("color=red") == 3
        assert "{9,10}" in text

    def test_plain_graph(self):
        text = export_dot(cycle_graph(3))
        assert "0 -- 1" in text and "color=red" not in text

    def test_zero_highlight_for_alternating_c4(self, tmp_path):
        g = cycle_graph(4)
        lab = optimal_labeling(g)
        path = tmp_path / "c4.dot"
        export_dot(g, lab, path=str(path))
        assert path.read_text().count("color=red") == 0


class TestSweep:
    def test_sweep_reports_corona_gap(self, tmp_path, capsys):
        out = tmp_path / "sweep.json"
        code = main(["sweep", "--oracle-bound", "32", "--out", str(out)])
        assert code == EXIT_OK
        payload = read(out)
        assert payload["all_passed"]
        cases = {d["case"]: d for d in payload["corona_discrepancies"]}
        assert cases["C4 (.) K2"]["formula"] == 6
        assert cases["C4 (.) K2"]["exact"] == 4
        err = capsys.readouterr().err
        assert "DISCREPANCY C4 (.) K2" in err
