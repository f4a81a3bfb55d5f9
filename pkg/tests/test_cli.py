import json

import pytest

from kmcrystals import make_point, point_to_json
from kmcrystals.cli import main
from kmcrystals.crystal import parse_dot
from kmcrystals.ratmat import mat

from corpus import A1


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.toml"
    path.write_text("cartan = [[2, -1], [-1, 2]]\n")
    return str(path)


@pytest.fixture
def a3_fold_file(tmp_path):
    path = tmp_path / "a3_folded.toml"
    path.write_text(
        "[graph]\nnodes = [1, 2, 3]\nedges = [[1, 2], [2, 3]]\nautomorphism = [3, 2, 1]\n"
    )
    return str(path)


@pytest.fixture
def c2_file(tmp_path):
    path = tmp_path / "c2.json"
    path.write_text(json.dumps({"cartan": [[2, -1], [-2, 2]]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_json(a2_file, capsys):
    code, out, _ = run(capsys, "graph", "--algebra", a2_file, "--weight", "1,1")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["nodes"]) == 8
    assert payload["complete"] is True


def test_graph_dot_round_trips_through_json(a2_file, capsys):
    code, dot, _ = run(
        capsys, "graph", "--algebra", a2_file, "--weight", "1,1", "--format", "dot"
    )
    assert code == 0
    code, js, _ = run(capsys, "graph", "--algebra", a2_file, "--weight", "1,1")
    payload = json.loads(js)
    nodes, edges = parse_dot(dot)
    assert nodes == {n["id"] for n in payload["nodes"]}
    assert edges == {(e["source"], e["color"], e["target"]) for e in payload["edges"]}


def test_outputs_byte_identical(a2_file, capsys):
    args = ("cactus", "--algebra", a2_file, "--weights", "1,0", "0,1", "1,1")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["holds"] is True


def test_cactus_writes_report_file(a2_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run(
        capsys,
        "cactus",
        "--algebra",
        a2_file,
        "--weights",
        "1,0",
        "0,1",
        "1,0",
        "--out",
        str(out),
    )
    assert code == 0
    report = json.loads(out.read_text())
    assert report["violations"] == []


def test_cactus_folded_algebra_matches_direct(a3_fold_file, c2_file, capsys):
    args = lambda alg: ("cactus", "--algebra", alg, "--weights", "1,0", "0,1", "1,0")
    code1, out1, _ = run(capsys, *args(a3_fold_file))
    code2, out2, _ = run(capsys, *args(c2_file))
    assert code1 == code2 == 0
    assert out1 == out2


def test_cactus_requires_depth_for_affine(tmp_path, capsys):
    path = tmp_path / "aff.toml"
    path.write_text("cartan = [[2, -2], [-2, 2]]\n")
    code, _, err = run(capsys, "cactus", "--algebra", str(path), "--weights", "1,0", "1,0", "1,0")
    assert code == 2
    assert "finite type" in err
    code, out, _ = run(
        capsys,
        "cactus",
        "--algebra",
        str(path),
        "--weights",
        "1,0",
        "1,0",
        "1,0",
        "--depth",
        "3",
    )
    assert code == 0 and json.loads(out)["holds"]


def test_star_command(a2_file, capsys):
    code, out, _ = run(capsys, "star", "--algebra", a2_file, "--word", "0,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["star_word"] == [1, 0]
    assert payload["eps_star"] == [1, 0]
    code, out, _ = run(capsys, "star", "--algebra", a2_file, "--word", "-")
    assert code == 0 and json.loads(out)["star_word"] == []


def test_commutor_command(a2_file, capsys):
    code, out, _ = run(
        capsys,
        "commutor",
        "--algebra",
        a2_file,
        "--weights",
        "1,0",
        "0,1",
        "--words",
        "-",
        "-",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["output"] == [
        {"lambda": [0, 1], "word": []},
        {"lambda": [1, 0], "word": []},
    ]


def test_decompose_command(a2_file, capsys):
    code, out, _ = run(
        capsys,
        "decompose",
        "--algebra",
        a2_file,
        "--weights",
        "1,0",
        "0,1",
        "--words",
        "0",
        "1",
        "--points",
        "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["slots"]) == 2


def test_fold_command(a3_fold_file, capsys):
    code, out, _ = run(capsys, "fold", "--algebra", a3_fold_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["orbits"] == [[1, 3], [2]]
    assert payload["m"] == [[4, -2], [-2, 2]]
    assert payload["cartan"] == [[2, -1], [-2, 2]]
    assert payload["finite_type"] is True


def test_quiver_violation_exit_code(tmp_path, capsys):
    p = make_point(A1, (1,), (1,), s=[mat([[1]])], t=[mat([[1]])])
    path = tmp_path / "point.json"
    path.write_text(json.dumps(point_to_json(p)))
    code, out, _ = run(capsys, "quiver", "--input", str(path), "--checks", "moment")
    assert code == 1
    assert json.loads(out)["holds"] is False
    code, out, _ = run(capsys, "quiver", "--input", str(path), "--checks", "duality,nilpotent")
    assert code == 0


def test_quiver_good_point(tmp_path, capsys):
    p = make_point(A1, (1,), (2,), s=[mat([[0, 1]])], t=[mat([[1], [0]])])
    path = tmp_path / "point.json"
    path.write_text(json.dumps(point_to_json(p)))
    code, out, _ = run(
        capsys, "quiver", "--input", str(path), "--checks", "moment,stable,lemma,phi,duality"
    )
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_quiver_random_duality_suite(capsys):
    code, out, err = run(
        capsys, "quiver", "--random", "10", "--shape", "a2", "--checks", "duality", "--seed", "7"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["seed"] == 7 and payload["points"] == 10
    assert "seed=7" in err


def test_malformed_input_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.toml"
    bad.write_text("cartan = [[2, -1],")  # truncated
    code, _, err = run(capsys, "graph", "--algebra", str(bad), "--weight", "1,0")
    assert code == 2 and "error" in err

    code, _, err = run(capsys, "graph", "--algebra", str(tmp_path / "missing.toml"), "--weight", "1,0")
    assert code == 2

    ok = tmp_path / "a2.toml"
    ok.write_text("cartan = [[2, -1], [-1, 2]]\n")
    code, _, err = run(capsys, "graph", "--algebra", str(ok), "--weight", "1")
    assert code == 2 and "coordinates" in err
    code, _, err = run(capsys, "graph", "--algebra", str(ok), "--weight", "1,x")
    assert code == 2


def test_bad_usage_exits_two(capsys):
    assert main(["graph"]) == 2
    capsys.readouterr()


def test_node_cap_env(tmp_path, capsys, monkeypatch):
    path = tmp_path / "a2.toml"
    path.write_text("cartan = [[2, -1], [-1, 2]]\n")
    monkeypatch.setenv("KMCRYSTALS_NODE_CAP", "3")
    code, _, err = run(capsys, "graph", "--algebra", str(path), "--weight", "1,1")
    assert code == 2 and "node cap" in err
