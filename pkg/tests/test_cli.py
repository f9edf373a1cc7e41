import json

import pytest

from cubic2ec import to_graph6, builtin
from cubic2ec.cli import SWEEP_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_certify_petersen_writes_certificate(tmp_path, capsys):
    out = tmp_path / "cert.json"
    code, stdout, _ = run(capsys, "certify", "--graph", "petersen", "-o", str(out))
    assert code == 0
    assert stdout.strip() == f"n=10 entries=132 min_support=11 bound=11"
    doc = json.loads(out.read_text())
    assert doc["n"] == 10 and doc["min_support_size"] <= 11


def test_certify_prism_without_output(capsys):
    code, stdout, _ = run(capsys, "certify", "--graph", "prism")
    assert code == 0
    assert stdout.startswith("n=6 ")


def test_certify_non_cubic_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
    code, _, stderr = run(capsys, "certify", "--edges", str(bad))
    assert code == 2
    assert "cubic" in stderr


def test_verify_roundtrip_and_tamper(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    code, _, _ = run(capsys, "certify", "--graph", "petersen", "-o", str(cert))
    assert code == 0
    code, stdout, _ = run(capsys, "verify", "--graph", "petersen", "--cert", str(cert))
    assert code == 0
    assert json.loads(stdout)["ok"] is True

    doc = json.loads(cert.read_text())
    doc["entries"][0]["weight"] = "1/2"
    cert.write_text(json.dumps(doc))
    code, stdout, _ = run(capsys, "verify", "--graph", "petersen", "--cert", str(cert))
    assert code == 1
    report = json.loads(stdout)
    assert report["ok"] is False
    failed = {c["name"] for c in report["checks"] if not c["passed"]}
    assert "weights_sum_to_one" in failed


def test_verify_wrong_graph_exits_1(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run(capsys, "certify", "--graph", "prism", "-o", str(cert))
    code, stdout, _ = run(capsys, "verify", "--graph", "k33", "--cert", str(cert))
    assert code == 1
    report = json.loads(stdout)
    failed = {c["name"] for c in report["checks"] if not c["passed"]}
    assert "graph_match" in failed


def test_opt_lp_gap_values(capsys):
    assert run(capsys, "opt", "--graph", "k4")[1].strip() == "4"
    assert run(capsys, "lp", "--graph", "petersen")[1].strip() == "10"
    assert run(capsys, "gap", "--graph", "petersen")[1].strip() == "11/10"


def test_gap_reads_graph6_file(tmp_path, capsys):
    path = tmp_path / "p.g6"
    path.write_text(to_graph6(builtin("petersen")) + "\n")
    code, stdout, _ = run(capsys, "gap", "--g6", str(path))
    assert code == 0 and stdout.strip() == "11/10"


def test_lemma3_subcommand(capsys):
    code, stdout, _ = run(capsys, "lemma3", "--graph", "petersen")
    assert code == 0
    doc = json.loads(stdout)
    assert doc["violations"] == 0 and doc["configurations"] == 60
    code, _, stderr = run(capsys, "lemma3", "--graph", "prism")
    assert code == 2


def test_sweep_small_corpus(tmp_path, capsys):
    corpus = tmp_path / "small.g6"
    corpus.write_text(
        "\n".join(
            to_graph6(builtin(name)) for name in ("k4", "k33", "prism", "petersen")
        )
        + "\nnot-a-graph6-line!!\n"
    )
    out = tmp_path / "rows.csv"
    code, _, _ = run(capsys, "sweep", "--g6", str(corpus), "-o", str(out))
    assert code == 0  # parse errors are flagged, not fatal
    import csv

    with out.open() as fh:
        rows = list(csv.DictReader(fh))
    assert out.read_text().splitlines()[0] == ",".join(SWEEP_COLUMNS)
    assert len(rows) == 5
    petersen_row = rows[3]
    assert petersen_row["opt"] == "11"
    assert petersen_row["gap"] == "11/10"
    assert petersen_row["bound_ok"] == "true"
    assert rows[4]["error"] != ""


def test_sweep_empty_file(tmp_path, capsys):
    corpus = tmp_path / "empty.g6"
    corpus.write_text("")
    code, stdout, _ = run(capsys, "sweep", "--g6", str(corpus))
    assert code == 0
    assert stdout.strip() == ",".join(SWEEP_COLUMNS)


def test_sweep_is_byte_stable_across_jobs(tmp_path, capsys):
    corpus = tmp_path / "c.g6"
    corpus.write_text(
        "\n".join(to_graph6(builtin(n)) for n in ("k4", "prism", "petersen")) + "\n"
    )
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run(capsys, "sweep", "--g6", str(corpus), "-o", str(a))[0] == 0
    assert run(capsys, "sweep", "--g6", str(corpus), "-o", str(b), "--jobs", "4")[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_unknown_builtin_is_parse_error(capsys):
    with pytest.raises(SystemExit):
        main(["opt", "--graph", "heawood"])  # argparse rejects the choice
