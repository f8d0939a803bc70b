import json

import pydot
import pytest

from arquot import serialize
from arquot.cli import main
from arquot.cluster import cluster_quiver
from arquot.errors import InvalidQuiver


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def a5(tmp_path, capsys):
    path = tmp_path / "a5.json"
    assert run(capsys, "cluster", "--family", "A", "--rank", "5", "--level", "1", "--out", str(path))[0] == 0
    return path


def test_json_round_trip_is_byte_identical(tmp_path, capsys):
    for fam, rank, u in [("A", 3, 1), ("D", 5, 1), ("E", 6, 2)]:
        q, _ = cluster_quiver(fam, rank, u)
        text = serialize.quiver_to_json(q)
        again = serialize.quiver_to_json(serialize.quiver_from_json(text))
        assert again == text


def test_malformed_documents(tmp_path, capsys):
    with pytest.raises(InvalidQuiver):
        serialize.quiver_from_json("[]")
    with pytest.raises(InvalidQuiver):
        serialize.quiver_from_json('{"format_version": 1}')
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "hom", "--in", str(bad))[0] == 2


def test_dot_export_parses(capsys):
    code, out, _ = run(capsys, "cluster", "--family", "D", "--rank", "4", "--level", "1", "--format", "dot")
    assert code == 0
    (graph,) = pydot.graph_from_dot_data(out)
    tau_edges = [e for e in graph.get_edges() if e.get("label") in ("tau", '"tau"')]
    assert len(tau_edges) == 16


def test_text_format(capsys):
    code, out, _ = run(capsys, "cluster", "--family", "A", "--rank", "2", "--level", "1", "--format", "text")
    assert code == 0 and "vertices: 5" in out and "twist: Reflect" in out


def test_cluster_bad_rank(capsys):
    assert run(capsys, "cluster", "--family", "D", "--rank", "3", "--level", "1")[0] == 2


def test_iso_self(a5, capsys):
    code, out, _ = run(capsys, "iso", "--a", str(a5), "--b", str(a5))
    assert code == 0
    assert json.loads(out)["witness"] == list(range(20))


def test_iso_negative(a5, tmp_path, capsys):
    other = tmp_path / "a3.json"
    run(capsys, "cluster", "--family", "A", "--rank", "3", "--level", "2", "--out", str(other))
    code, out, _ = run(capsys, "iso", "--a", str(a5), "--b", str(other))
    assert code == 1 and json.loads(out)["isomorphic"] is False


def test_delete_and_compare(a5, tmp_path, capsys):
    out_path = tmp_path / "quot.json"
    code, _, _ = run(capsys, "delete", "--in", str(a5), "--rows", "1,2,4,5", "--out", str(out_path))
    assert code == 0
    small = tmp_path / "a1.json"
    run(capsys, "cluster", "--family", "A", "--rank", "1", "--level", "3", "--out", str(small))
    assert run(capsys, "iso", "--a", str(out_path), "--b", str(small))[0] == 0
    code, out, _ = run(capsys, "hom", "--in", str(out_path))
    assert code == 1
    code, out, _ = run(capsys, "hom", "--in", str(out_path), "--oracle")
    assert code == 0 and json.loads(out)["matrix"] == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def test_delete_not_tau_stable(a5, capsys):
    code, out, err = run(capsys, "delete", "--in", str(a5), "--rows", "1")
    assert code == 1
    doc = json.loads(out)
    assert doc["tau_stable"] is False and len(doc["witness"]) == 2


def test_delete_bad_orbit(a5, capsys):
    assert run(capsys, "delete", "--in", str(a5), "--orbits", "99")[0] == 2


def test_hom_matrix_output(capsys, tmp_path):
    path = tmp_path / "a2.json"
    run(capsys, "cluster", "--family", "A", "--rank", "2", "--level", "1", "--out", str(path))
    c1, fast, _ = run(capsys, "hom", "--in", str(path))
    c2, slow, _ = run(capsys, "hom", "--in", str(path), "--oracle")
    assert c1 == c2 == 0 and fast == slow


def test_verify_a(capsys):
    code, out, _ = run(capsys, "verify", "A", "--u", "3", "--v", "1", "--m", "1", "--n", "5")
    assert code == 0
    assert json.loads(out)["quotient_vertices"] == 4


def test_verify_text_and_hypothesis_failure(capsys):
    code, out, _ = run(capsys, "verify", "D", "--u", "3", "--v", "1", "--m", "4", "--n", "10", "--format", "text")
    assert code == 0 and "isomorphic: True" in out
    assert run(capsys, "verify", "A", "--u", "3", "--v", "2", "--m", "1", "--n", "5")[0] == 1
    assert run(capsys, "verify", "A", "--u", "3", "--v", "1")[0] == 2


def test_verify_d_probe_fails(capsys):
    code, out, _ = run(capsys, "verify", "D", "--u", "2", "--v", "1", "--m", "5", "--n", "9")
    assert code == 1 and "open_question" in json.loads(out)


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--source", "A,5,1", "--target", "A,1,3")
    assert code == 0 and json.loads(out)["witnesses"]
    code, out, _ = run(capsys, "search", "--source", "E,8,1", "--target", "E,6,3")
    assert code == 1 and json.loads(out)["witnesses"] == []


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "search", "--source", "A,5", "--target", "A,1,3")[0] == 2


def test_figures(tmp_path, capsys):
    png = tmp_path / "fig" / "d5.png"
    assert run(capsys, "cluster", "--family", "D", "--rank", "5", "--level", "1", "--figure", str(png))[0] == 0
    assert png.stat().st_size > 1000
    pdf = tmp_path / "e.pdf"
    code, _, _ = run(capsys, "verify", "E6_from_E7", "--u", "6", "--v", "4", "--figure", str(pdf))
    assert code == 0 and pdf.read_bytes().startswith(b"%PDF")
