import json

import pytest

from mhg.cli import main

IIB = ["5", "3", "3", "16", "13"]
III3 = ["3", "1", "3", "10", "9"]


@pytest.fixture
def pentagon(tmp_path):
    path = tmp_path / "pentagon.json"
    path.write_text(
        json.dumps({"n": 5, "edges": [[i, (i + 1) % 5, 5] for i in range(5)]})
    )
    return str(path)


@pytest.fixture
def triangle(tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1, 3], [0, 2, 3], [1, 2, 3]]}))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params_check_admissible(capsys):
    code, out, _ = run(capsys, ["params", "check", *IIB])
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "acceptable": True,
        "admissible": True,
        "c": 13,
        "c_prime": 16,
        "case": "IIB",
        "params": [5, 3, 3, 16, 13],
    }


def test_params_check_not_acceptable(capsys):
    code, out, _ = run(capsys, ["params", "check", "2", "1", "1", "8", "7"])
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "acceptable": False,
        "case": "NotAcceptable",
        "params": [2, 1, 1, 8, 7],
    }


def test_params_check_sorted_keys(capsys):
    _, out, _ = run(capsys, ["params", "check", *IIB])
    keys = list(json.loads(out))
    assert keys == sorted(keys)


def test_params_list(capsys):
    code, out, _ = run(capsys, ["params", "list", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert lines[0] == "3 1 2 10 9  III"


def test_params_list_json(capsys):
    code, out, _ = run(capsys, ["params", "list", "5", "--json"])
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 33
    assert {"params": [5, 3, 3, 16, 13], "case": "IIB", "c": 13, "c_prime": 16} in entries


def test_magic_show_json(capsys):
    code, out, _ = run(capsys, ["magic", "show", *IIB, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == 3
    assert obj["candidates"] == [3]
    assert obj["permutation"] == [5, 1, 4, 2, 3]
    assert obj["time"] == [1, 3, None, 2, 0]
    assert obj["oplus"][4][4] == 2  # 5 (+) 5


def test_magic_show_text(capsys):
    code, out, _ = run(capsys, ["magic", "show", *IIB])
    assert code == 0
    assert "m = 3" in out
    assert "permutation: 5 1 4 2 3" in out
    assert "t(3)=inf" in out


def test_magic_show_bad_m(capsys):
    code, _, err = run(capsys, ["magic", "show", *IIB, "--m", "1"])
    assert code == 2
    assert "magic distance" in err


def test_graph_check_member(capsys, triangle):
    code, out, _ = run(capsys, ["graph", "check", triangle, "--params", *IIB, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["member"] is True
    assert obj["complete"] is True
    assert obj["violating_triangle"] is None


def test_graph_check_violation(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]}))
    code, out, _ = run(capsys, ["graph", "check", str(path), "--params", *IIB, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["member"] is False
    assert obj["violating_triangle"]["vertices"] == [0, 1, 2]
    assert obj["violating_triangle"]["violations"] == ["K1Low"]


def test_graph_check_malformed_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, ["graph", "check", str(path), "--params", *IIB])
    assert code == 2
    assert "invalid JSON" in err


def test_graph_check_bad_edge_shape(capsys, tmp_path):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps({"n": 3, "edges": [[0, 1]]}))
    code, _, err = run(capsys, ["graph", "check", str(path), "--params", *IIB])
    assert code == 2
    assert "edges[0]" in err


def test_graph_check_missing_file(capsys):
    code, _, err = run(capsys, ["graph", "check", "/no/such/file.json", "--params", *IIB])
    assert code == 2
    assert err


def test_graph_check_non_admissible_params(capsys, triangle):
    code, _, err = run(capsys, ["graph", "check", triangle, "--params", "3", "1", "1", "8", "9"])
    assert code == 2
    assert "not admissible" in err


def test_complete_pentagon(capsys, pentagon):
    code, out, _ = run(capsys, ["complete", pentagon, "--params", *IIB, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["m"] == 3
    assert [0, 2, 2] in obj["graph"]["edges"]
    assert len(obj["graph"]["edges"]) == 10


def test_complete_trace(capsys, pentagon):
    code, out, _ = run(capsys, ["complete", pentagon, "--params", *IIB, "--trace"])
    assert code == 0
    obj = json.loads(out)
    assert obj["trace"]["stages"] == [
        {"stage": 4, "distance": 2, "pairs": [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]}
    ]
    assert obj["trace"]["fallback_pairs"] == []


def test_complete_plain(capsys, triangle):
    code, out, _ = run(capsys, ["complete", triangle, "--params", *IIB])
    assert code == 0
    obj = json.loads(out)
    assert obj == {"n": 3, "edges": [[0, 1, 3], [0, 2, 3], [1, 2, 3]]}


def test_family_classify(capsys):
    code, out, _ = run(
        capsys, ["family", "classify", "--params", *IIB, "--cycle", "5,5,5,5,5", "--json"]
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["forbidden"] is True
    assert obj["canonical"] == [5, 5, 5, 5, 5]
    assert {"tag": "Special5", "n": 2, "d_edges": [5, 5, 5, 5, 5], "x_edges": []} in obj[
        "witnesses"
    ]


def test_family_classify_text(capsys):
    code, out, _ = run(capsys, ["family", "classify", "--params", *IIB, "--cycle", "3,3,3"])
    assert code == 0
    assert "forbidden: no" in out


def test_family_classify_bad_cycle(capsys):
    code, _, err = run(capsys, ["family", "classify", "--params", *IIB, "--cycle", "5,x"])
    assert code == 2
    assert "comma-separated" in err


def test_family_enumerate(capsys):
    code, out, _ = run(capsys, ["family", "enumerate", "--params", *IIB, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 36
    assert obj["cycles"][0] == [1, 1, 1]
    assert [5, 5, 5, 5, 5] in obj["cycles"]


def test_family_enumerate_text(capsys):
    code, out, _ = run(capsys, ["family", "enumerate", "--params", *III3])
    assert code == 0
    assert out.strip().splitlines() == ["1,1,3", "3,3,3"]


def test_family_witness_found(capsys, pentagon):
    code, out, _ = run(capsys, ["family", "witness", pentagon, "--params", *IIB])
    assert code == 1
    assert "Special5" in out


def test_family_witness_none(capsys, triangle):
    code, out, _ = run(capsys, ["family", "witness", triangle, "--params", *IIB])
    assert code == 0
    assert out.strip() == "none"


def test_family_witness_json(capsys, pentagon):
    code, out, _ = run(capsys, ["family", "witness", pentagon, "--params", *IIB, "--json"])
    assert code == 1
    obj = json.loads(out)
    assert obj["witness"]["walk"] == [0, 1, 2, 3, 4]
    assert obj["witness"]["tag"] == "Special5"


def test_verify_text(capsys):
    code, out, _ = run(capsys, ["verify", "--params", *III3, "--n-max", "3"])
    assert code == 0
    assert "graphs checked: 64" in out
    assert out.strip().endswith("ok")


def test_verify_json_byte_stable(capsys):
    argv = ["verify", "--params", *III3, "--n-max", "4", "--json"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    obj = json.loads(out1)
    assert obj["ok"] is True
    assert obj["graphs_checked"] == 4160


def test_verify_sampled_seed_echo(capsys):
    code, out, _ = run(
        capsys,
        ["verify", "--params", *IIB, "--n-max", "4", "--sample", "200", "--seed", "9", "--json"],
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["mode"] == "sampled"
    assert obj["seed"] == 9
    assert obj["sample"] == 200


def test_table_text(capsys):
    code, out, _ = run(capsys, ["table", "--params", "4", "1", "3", "14", "11"])
    assert code == 0
    assert out.rstrip("\n") == (
        "    0   1  2  3\n"
        "0δ  ·   ·  ·\n"
        "1δ  ·   ·  δ  δ\n"
        "2δ  ·  K2\n"
        "3δ     C1"
    )


def test_table_json(capsys):
    code, out, _ = run(capsys, ["table", "--params", *IIB, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert {"i": 5, "j": 0, "tag": "C1^5"} in obj["cells"]
    assert len(obj["cells"]) == 11


def test_twisted(capsys):
    code, out, _ = run(
        capsys,
        [
            "twisted",
            "--params1", "4", "1", "3", "12", "11",
            "--params2", "4", "2", "3", "14", "11",
        ],
    )
    assert code == 0
    assert "twisted pair: yes" in out


def test_twisted_json(capsys):
    code, out, _ = run(
        capsys,
        [
            "twisted",
            "--params1", "4", "1", "3", "12", "11",
            "--params2", "4", "2", "3", "12", "11",
            "--json",
        ],
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["twisted"] is False


def test_usage_error_exit_code(capsys):
    assert main(["params"]) == 2
    assert main(["no-such-command"]) == 2
    assert main([]) == 2


def test_verify_rejects_bad_n(capsys):
    code, _, err = run(capsys, ["verify", "--params", *III3, "--n-max", "2"])
    assert code == 2
    assert "n_max" in err
