import json

from domgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_family_json(capsys):
    code, out, _ = run(capsys, "family", "--family", "path", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 3, "edges": [[1, 2], [2, 3]]}


def test_family_table(capsys):
    code, out, _ = run(capsys, "family", "--family", "cycle", "--n", "4")
    assert code == 0
    assert "vertices" in out and "4" in out


def test_family_dot(capsys):
    code, out, _ = run(capsys, "family", "--family", "path", "--n", "2", "--format", "dot")
    assert code == 0
    assert "v1 -- v2;" in out


def test_family_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "family", "--family", "cycle", "--n", "2")
    assert code == 1
    assert "error" in err


def test_missing_spec_exit_2(capsys):
    code, _, err = run(capsys, "family")
    assert code == 2


def test_conflicting_spec_exit_2(capsys):
    code, _, err = run(
        capsys, "family", "--family", "path", "--n", "3", "--product", "join:path:2,path:2"
    )
    assert code == 2


def test_unknown_flag_exit_2(capsys):
    assert main(["family", "--bogus"]) == 2


def test_unknown_subcommand_exit_2(capsys):
    assert main(["frobnicate"]) == 2


def test_product_expression(capsys):
    code, out, _ = run(
        capsys, "family", "--product", "join:complete:2,complete:2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 4 and len(obj["edges"]) == 6


def test_bad_product_expression(capsys):
    code, _, err = run(capsys, "family", "--product", "meet:path:2,path:2")
    assert code == 2


def test_ladder_family(capsys):
    code, out, _ = run(capsys, "family", "--family", "ladder", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["n"] == 6


def test_dominating_json(capsys):
    code, out, _ = run(capsys, "dominating", "--family", "path", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == [[2], [1, 2], [1, 3], [2, 3], [1, 2, 3]]


def test_dominating_csv(capsys):
    code, out, _ = run(capsys, "dominating", "--family", "path", "--n", "4", "--format", "csv")
    assert code == 0
    assert out == "n,j,count\n4,2,4\n4,3,4\n4,4,1\n"


def test_dominating_too_large_exit_1(capsys):
    code, _, err = run(capsys, "dominating", "--family", "path", "--n", "30")
    assert code == 1
    assert "cap" in err


def test_reconfig_stats(capsys):
    code, out, _ = run(capsys, "reconfig", "--family", "complete", "--n", "3", "--stats")
    assert code == 0
    lines = dict(
        (line.split(None, 1)[0], line.split()[-1]) for line in out.strip().splitlines()
    )
    assert lines["order"] == "7"
    assert lines["size"] == "9"
    assert lines["parts"] == "4/3"
    assert lines["components"] == "1"
    assert "min degree  2" in out and "max degree  3" in out


def test_reconfig_empty_warning(capsys):
    code, out, _ = run(capsys, "reconfig", "--family", "path", "--n", "9", "--k", "2")
    assert code == 0
    assert "warning" in out


def test_count_sums_table(capsys):
    code, out, _ = run(capsys, "count", "--family", "path", "--n-max", "6", "--sums")
    assert code == 0
    assert out.strip() == "1,3,5,9,17,31"


def test_count_sums_csv(capsys):
    code, out, _ = run(
        capsys, "count", "--family", "cycle", "--n-max", "4", "--sums", "--format", "csv"
    )
    assert code == 0
    assert out == "family,n,order\ncycle,1,1\ncycle,2,3\ncycle,3,7\ncycle,4,11\n"


def test_count_triangle_csv(capsys):
    code, out, _ = run(
        capsys, "count", "--family", "path", "--n-max", "3", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[0] == "family,n,j,count"
    assert "path,3,2,3" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "cycles", "--max-n", "6", "--format", "json"
    )
    assert code == 0
    report = json.loads(out)
    assert report["counts"]["fail"] == 0
    assert report["counts"]["erratum"] >= 1
    checks = {r["check"] for r in report["records"]}
    assert "cycle/order-seed-erratum" in checks


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "complete", "--max-n", "5")
    assert code == 0
    assert "PASS" in out and "0 fail" in out


def test_export_graph_to_file(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, _, _ = run(
        capsys, "export", "--family", "path", "--n", "3", "--format", "dot",
        "--output", str(target),
    )
    assert code == 0
    assert "v1 -- v2;" in target.read_text()


def test_export_reconfig_json(tmp_path, capsys):
    target = tmp_path / "d.json"
    code, _, _ = run(
        capsys, "export", "--family", "path", "--n", "3", "--k", "3",
        "--output", str(target),
    )
    assert code == 0
    obj = json.loads(target.read_text())
    assert len(obj["nodes"]) == 5 and obj["k"] == 3


def test_input_graph_file(tmp_path, capsys):
    source = tmp_path / "g.json"
    source.write_text('{"n": 3, "edges": [[1, 2], [2, 3]]}')
    code, out, _ = run(capsys, "dominating", "--input", str(source), "--format", "json")
    assert code == 0
    assert json.loads(out)[0] == [2]


def test_repeat_runs_are_byte_identical(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "parity", "--max-n", "4",
                      "--seed", "7", "--format", "json")
    _, second, _ = run(capsys, "verify", "--suite", "parity", "--max-n", "4",
                       "--seed", "7", "--format", "json")
    assert first == second
    _, a, _ = run(capsys, "count", "--family", "path", "--n-max", "9", "--format", "csv")
    _, b, _ = run(capsys, "count", "--family", "path", "--n-max", "9", "--format", "csv")
    assert a == b
