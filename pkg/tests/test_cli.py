import json

import pytest

from nodal_expansion import cli
from nodal_expansion import fileio
from nodal_expansion.generators import gen_path


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.txt"
    fileio.write_edge_list(gen_path(3), path)
    return str(path)


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    fileio.write_edge_list(gen_path(4), path)
    return str(path)


def run_capture(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, out.out


def test_spectrum_golden(capsys, p3_file):
    code, out = run_capture(capsys, ["spectrum", p3_file])
    assert code == 0
    # frozen from a reference run; the eigenvalues are 0, 1, 3 to rounding
    assert out == "9.99658224412e-17,1,3\n"


def test_analyze_p4(capsys, p4_file):
    code, out = run_capture(capsys, ["analyze", p4_file, "--k", "2", "--mode", "exact"])
    assert code == 0
    report = json.loads(out)
    assert report["theorem_holds"] is True
    assert report["a"] == 1 and report["b"] == 1


def test_byte_identical_reruns(capsys, p4_file):
    _, out1 = run_capture(capsys, ["analyze", p4_file, "--k", "2"])
    _, out2 = run_capture(capsys, ["analyze", p4_file, "--k", "2"])
    assert out1 == out2


def test_gen_path_golden(tmp_path, capsys):
    out_file = tmp_path / "out.txt"
    code, _ = run_capture(capsys, ["gen", "path", "2", "-o", str(out_file)])
    assert code == 0
    assert out_file.read_text() == "2 1\n0 1\n"


def test_gen_to_stdout(capsys):
    code, out = run_capture(capsys, ["gen", "cycle", "3"])
    assert code == 0
    assert out == "3 3\n0 1\n0 2\n1 2\n"


def test_expander_check_eigvec(capsys, p3_file):
    code, out = run_capture(
        capsys, ["expander-check", p3_file, "--eigvec", "2", "--c", "0.5"]
    )
    assert code == 0
    assert json.loads(out)["mode"] == "exact"


def test_expander_check_weights_file(capsys, p3_file, tmp_path):
    wfile = tmp_path / "w.txt"
    wfile.write_text("1.0\n1.0\n1.0\n")
    code, out = run_capture(
        capsys, ["expander-check", p3_file, "--weights", str(wfile), "--c", "1.1"]
    )
    assert code == 0
    v = json.loads(out)
    assert v["is_expander"] is False and v["witness"] is not None


def test_partition_command(capsys, p3_file, tmp_path):
    wfile = tmp_path / "w.txt"
    wfile.write_text("1.0\n1.0\n1.0\n")
    code, out = run_capture(
        capsys,
        ["partition", p3_file, "--k", "2", "--c", "1.5", "--weights", str(wfile)],
    )
    assert code == 0
    res = json.loads(out)
    assert res["found"] is True and res["valid"] is True
    code, out = run_capture(
        capsys,
        ["partition", p3_file, "--k", "2", "--c", "0.5", "--weights", str(wfile)],
    )
    assert code == 0
    assert json.loads(out)["found"] is False


def test_verify_proof(capsys, p4_file, tmp_path):
    pos = tmp_path / "pos.txt"
    neg = tmp_path / "neg.txt"
    pos.write_text("0\n1\n")
    neg.write_text("2 3\n")
    code, out = run_capture(
        capsys,
        ["verify-proof", p4_file, "--k", "2", "--pos", str(pos), "--neg", str(neg)],
    )
    assert code == 0
    res = json.loads(out)
    names = [c["name"] for c in res["checks"]]
    assert "prop_sum" in names  # a+b = k+1 here
    assert all(c["passed"] for c in res["checks"])


def test_demo_counterexample_small(capsys):
    code, out = run_capture(
        capsys,
        ["demo-counterexample", "--n-block", "4", "--d", "3", "--path-len", "4",
         "--seed", "0"],
    )
    assert code == 0
    res = json.loads(out)
    assert res["n"] == 12
    assert res["weighted"]["is_expander"] is True  # corollary guarantee


def test_batch_verify_small(capsys):
    code, out = run_capture(capsys, ["batch-verify", "--max-n", "4"])
    assert code == 0
    assert "violations: 0" in out


def test_exit_code_usage_errors(capsys):
    assert cli.run(["spectrum", "/nonexistent/file.txt"]) == 2
    capsys.readouterr()
    assert cli.run(["analyze", "--bogus-flag"]) == 2
    capsys.readouterr()
    assert cli.run(["gen", "nosuchfamily", "3"]) == 2
    capsys.readouterr()


def test_exit_code_check_failure(capsys, p4_file, monkeypatch):
    # force a failing report to exercise the exit-code contract
    real = cli.ct.verify_theorem1

    def fake(g, k, mode="exact", budget=1000):
        report = real(g, k, mode=mode, budget=budget)
        report.a_plus_b_le_k = False
        report.degenerate_gap_flag = False
        return report

    monkeypatch.setattr(cli.ct, "verify_theorem1", fake)
    code, _ = run_capture(capsys, ["analyze", p4_file, "--k", "2"])
    assert code == 1


def test_malformed_edge_list_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n1 x\n")
    assert cli.run(["spectrum", str(bad)]) == 2
    err = capsys.readouterr().err
    assert ":3:" in err
