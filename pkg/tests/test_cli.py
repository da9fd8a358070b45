import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest
from referencing import Registry, Resource

from chessboard import cli, cubic, graded
from chessboard.scalar import J2, ExactScalar


def _registry():
    reg = Registry()
    for f in resources.files("chessboard.schemas").iterdir():
        if f.name.endswith(".json"):
            reg = reg.with_resource(f.name, Resource.from_contents(json.loads(f.read_text())))
    return reg


REGISTRY = _registry()


def validate(obj, name):
    schema = REGISTRY.contents(name)
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(obj)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chessboard", "table", "--n", "2", "--law", "oslash"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 513


def test_table_csv_and_json(capsys):
    code, csv_text, _ = run(["table", "--n", "2"], capsys)
    assert code == 0
    lines = csv_text.splitlines()
    assert len(lines) == 1 + 8 ** 3
    code, js, _ = run(["table", "--n", "2", "--format", "json"], capsys)
    assert code == 0
    validate(json.loads(js), "table.json")


def test_table_is_byte_deterministic_across_thread_counts(capsys, monkeypatch):
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("CHESSBOARD_THREADS", threads)
        outs.append(run(["table", "--n", "2", "--law", "star", "--format", "json"], capsys)[1])
    assert outs[0] == outs[1]


def test_bad_thread_variable_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("CHESSBOARD_THREADS", "many")
    code, _, err = run(["table"], capsys)
    assert code == 2
    assert "CHESSBOARD_THREADS" in err


@pytest.mark.parametrize("argv", [
    ["table", "--n", "5"],
    ["table", "--law", "other"],
    ["verify", "--suite", "nope"],
    ["dispersion", "--grid", "1:0:0.5"],
    ["dispersion", "--grid", "a:b"],
    ["dispersion", "--grid", "0:1:0"],
    ["bracket-search", "--n", "1"],
    ["bracket-search", "--arity", "4"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_verify_single_suite(capsys):
    code, out, err = run(["verify", "--suite", "cubic", "--seed", "7"], capsys)
    assert code == 0
    report = json.loads(out)
    validate(report, "verify.json")
    assert report["seed"] == 7 and report["passed"]
    assert "seed: 7" in err
    assert "[PASS]" in err and "[FAIL]" not in err


def _strip_times(report):
    for s in report["suites"]:
        s.pop("seconds")
    return report


def test_verify_is_deterministic_for_a_seed(capsys):
    a = json.loads(run(["verify", "--suite", "graded", "--seed", "3"], capsys)[1])
    b = json.loads(run(["verify", "--suite", "graded", "--seed", "3"], capsys)[1])
    assert _strip_times(a) == _strip_times(b)


def test_verify_fails_when_the_cyclic_root_is_corrupted(capsys, monkeypatch):
    monkeypatch.setattr(cubic, "J", J2)
    code, out, err = run(["verify", "--suite", "cubic"], capsys)
    assert code == 1
    report = json.loads(out)
    validate(report, "verify.json")
    assert not report["passed"]
    assert "[FAIL]" in err
    failed = [c for c in report["suites"][0]["checks"] if not c["passed"]]
    assert any("counterexample" in c for c in failed)


def test_verify_fails_when_grading_is_corrupted(capsys, monkeypatch):
    monkeypatch.setattr(graded, "j_power", lambda e: ExactScalar(1))
    code, _, _ = run(["verify", "--suite", "graded"], capsys)
    assert code == 1


def test_verify_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(["verify", "--suite", "envelope", "-o", str(path)], capsys)
    assert code == 0 and out == ""
    validate(json.loads(path.read_text()), "verify.json")


def test_unwritable_output_exits_1(tmp_path, capsys):
    code, _, err = run(["flat", "-o", str(tmp_path / "missing" / "x.json")], capsys)
    assert code == 1
    assert err


def test_flat(capsys):
    code, out, _ = run(["flat"], capsys)
    assert code == 0
    report = json.loads(out)
    validate(report, "flat.json")
    assert report["solutions"] and all(s["flat"] for s in report["solutions"])


def test_bracket_search_classical_case(capsys):
    code, out, _ = run(["bracket-search", "--n", "2", "--arity", "2", "--seed", "1"], capsys)
    assert code == 0
    report = json.loads(out)
    validate(report, "bracket_search.json")
    assert report["seed"] == 1
    assert report["nullity"] == 1
    assert report["null_vectors"] == [["1", "-1", "1"]]


def test_dispersion_csv(capsys):
    code, out, _ = run(["dispersion", "--m", "1", "--grid=-1:1:1"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k_x,k_y,k_z,m,omega"
    assert len(lines) == 28
    kx, ky, kz, m, w = map(float, lines[1].split(","))
    assert w ** 3 == pytest.approx(kx ** 3 + ky ** 3 + kz ** 3 - 3 * kx * ky * kz + m ** 3)


def test_bracket_search_bounded_deeper_nesting(capsys):
    code, out, _ = run(["bracket-search", "--depth", "3", "--max-words", "12", "--seed", "2"], capsys)
    assert code == 0
    report = json.loads(out)
    validate(report, "bracket_search.json")
    assert report["depth"] == 3
    assert len(report["words"]) == 12
    assert report["rank"] + report["nullity"] == 12


def test_bracket_search_rejects_shallow_depth(capsys):
    assert run(["bracket-search", "--depth", "1"], capsys)[0] == 2
