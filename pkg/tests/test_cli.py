import json

import pytest

from hyperlog.cli import ScanConfig, fractions_in_unit_interval, main, scan_triples
from hyperlog.criteria import ClassificationRecord


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "--q", "1/2", "--a", "7/6", "--b", "11/6")
    assert code == 0 and "LogFunctional" in out
    code, out, _ = run(capsys, "classify", "--q", "1/2", "--a", "1/6", "--b", "1/4", "--json")
    assert code == 0 and json.loads(out)["label"] == "LogAtOneOnly"
    code, _, _ = run(capsys, "classify", "--q", "1/2", "--a", "1/2", "--b", "3/4")
    assert code == 2


def test_classify_json_round_trip(capsys):
    _, out, _ = run(capsys, "classify", "--q", "1/3", "--a", "5/7", "--b", "2/9", "--json")
    rec = ClassificationRecord.from_json(json.loads(out))
    assert json.loads(json.dumps(rec.to_json())) == json.loads(out)


@pytest.mark.parametrize("argv", [
    ["classify", "--q", "one half", "--a", "1", "--b", "1"],
    ["classify", "--q", "1/0", "--a", "1", "--b", "1"],
    ["classify", "--q", "1/2"],
    ["nosuch"],
    ["scan", "--max-denominator", "1", "--output", "x.jsonl"],
])
def test_parse_failures(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_scan_smallest_case(capsys, tmp_path):
    path = tmp_path / "s.jsonl"
    code, _, _ = run(capsys, "scan", "--max-denominator", "2", "--output", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["label"] == "FailsPreconditions"


def strip_timing(text):
    rows = [json.loads(line) for line in text.splitlines()]
    for r in rows:
        r.pop("micros")
    return rows


def test_scan_deterministic_and_parseable(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert run(capsys, "scan", "--max-denominator", "5", "--output", str(a))[0] == 0
    assert run(capsys, "scan", "--max-denominator", "5", "--output", str(b), "--jobs", "2")[0] == 0
    rows = strip_timing(a.read_text())
    assert rows == strip_timing(b.read_text())
    for r in rows:
        core = {k: v for k, v in r.items() if k != "version"}
        assert ClassificationRecord.from_json(core).to_json() == core


def test_scan_finds_log_functional(tmp_path):
    cfg = ScanConfig(6, str(tmp_path / "x"))
    triples = list(scan_triples(cfg))
    assert all(0 < v < 1 for t in triples for v in t)
    assert all(a <= b for _, a, b in triples)
    assert len(triples) == len(fractions_in_unit_interval(6)) * 66
    main(["scan", "--max-denominator", "6", "--output", cfg.output])
    labels = [json.loads(line)["label"] for line in open(cfg.output)]
    assert "LogFunctional" in labels


def test_scan_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "scan", "--max-denominator", "3", "--output", str(tmp_path / "no" / "x.jsonl"))
    assert code == 3 and err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--top", "1,1", "--bottom", "2", "--x", "1/2", "--json")
    assert code == 0
    assert json.loads(out)["mid"].startswith("1.3862943611198906188")


def test_eval_divergent(capsys):
    code, _, err = run(capsys, "eval", "--top", "1,1,1", "--bottom", "2", "--x", "1/2")
    assert code == 2 and "DivergentArgument" in err


def test_hodge(capsys):
    code, out, _ = run(capsys, "hodge", "--mu", "1/2", "--beta1", "1/6", "--beta2", "5/6", "--json")
    d = json.loads(out)
    assert code == 0 and d["d_chi"] == 1 and d["tate"] is True


def test_gm(capsys):
    code, out, _ = run(capsys, "gm", "--beta1", "1/6", "--beta2", "2/3", "--point", "0", "--json")
    assert code == 0 and json.loads(out)["in_unit_interval"] is True


def test_detscan(capsys):
    code, out, _ = run(capsys, "detscan", "--mu", "1/2", "--beta1", "1/6", "--beta2", "5/6",
                       "--rmax", "30", "--json")
    assert code == 0 and json.loads(out)["vanishing_r"] == []
    code, _, _ = run(capsys, "detscan", "--mu", "1", "--beta1", "1/6", "--beta2", "5/6")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["verify", "explicit-log", "--x", "1/2", "--prec", "192", "--tol", "2e-25"],
    ["verify", "contiguity", "--all", "--prec", "128"],
    ["verify", "contiguity", "--kind", "theta1", "--params", "1,1,1/2,7/6,11/6", "--x", "1/3"],
    ["verify", "euler-integral", "--N", "5", "--a", "1", "--b", "2", "--n", "1", "--t", "1/3", "--prec", "64"],
    ["verify", "gauss-derivative", "--beta1", "1/6", "--beta2", "2/3", "--t", "1/3"],
    ["verify", "detscan", "--mu", "1/2", "--beta1", "1/6", "--beta2", "5/6", "--rmax", "20"],
])
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit_code(capsys):
    # a tolerance below the achievable radius fails the check rather than erroring
    code, out, _ = run(capsys, "verify", "explicit-log", "--x", "1/2", "--prec", "64", "--tol", "1e-200")
    assert code == 4 and "FAIL" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "contiguity", "--kind", "LowerB", "--x", "1/4", "--json")
    d = json.loads(out)
    assert code == 0 and d["pass"] and len(d["checks"]) == 1
