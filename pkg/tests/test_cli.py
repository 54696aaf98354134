import json
import subprocess
import sys

from weylmax import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_text(capsys):
    code, out, _ = run_cli(capsys, "roots", "--type", "A2")
    assert code == 0
    assert "3 positive roots" in out
    assert "3: 1 1" in out


def test_roots_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "roots", "--type", "F4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["positive_roots"]) == 24
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == out


def test_roots_csv(capsys):
    code, out, _ = run_cli(capsys, "roots", "--type", "A2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["index,c1,c2", "1,1,0", "2,0,1", "3,1,1"]


def test_classes_json_schema(capsys):
    code, out, _ = run_cli(capsys, "classes", "--type", "A2",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "A2" and data["rank"] == 2
    rows = data["classes"]
    assert [set(r) for r in rows] == [{
        "size", "min_length", "max_length", "representative_word",
        "involution", "n_max_length_elements"}] * 3
    assert rows[0]["representative_word"] == "e"
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == out


def test_wm_json(capsys):
    code, out, _ = run_cli(capsys, "wm", "--type", "B2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["entries"]) == 4
    sigmas = [tuple(e["sigma"]) for e in data["entries"]]
    assert set(sigmas) == {(1, 2), (2,), (1,), ()}
    top = [e for e in data["entries"] if e["sigma"] == []][0]
    assert top["predicted_dimension"] == 6
    assert top["max_word"] == "1 2 1 2"


def test_bruhat_verdicts(capsys):
    assert run_cli(capsys, "bruhat", "--type", "A2",
                   "--u", "1", "--v", "1 2 1")[1] == "u < v\n"
    assert run_cli(capsys, "bruhat", "--type", "A2",
                   "--u", "1 2 1", "--v", "1")[1] == "u > v\n"
    assert run_cli(capsys, "bruhat", "--type", "A2",
                   "--u", "1 2", "--v", "2 1")[1] == "incomparable\n"
    assert run_cli(capsys, "bruhat", "--type", "A2",
                   "--u", "e", "--v", "")[1] == "u = v\n"
    code, out, _ = run_cli(capsys, "bruhat", "--type", "A2",
                           "--u", "2 1 2", "--v", "1 2 1", "--format", "json")
    data = json.loads(out)
    assert data["verdict"] == "u = v"
    assert data["u"] == "1 2 1"  # canonical word of the parsed element


def test_bruhat_word_errors(capsys):
    code, _, err = run_cli(capsys, "bruhat", "--type", "A2",
                           "--u", "1 x", "--v", "1")
    assert code == 2 and "'x'" in err
    code, _, err = run_cli(capsys, "bruhat", "--type", "A2",
                           "--u", "3", "--v", "1")
    assert code == 2 and "'3'" in err and "1..2" in err


def test_bad_type_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "roots", "--type", "H3")
    assert code == 2 and "error:" in err


def test_verify_pass_and_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "--type", "A2", "--suite", "all",
                           "--with-oracle")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7  # six suites plus oracle
    assert all(line.startswith("[PASS]") for line in lines)
    assert run_cli(capsys, "verify", "--type", "A1", "--suite", "all")[0] == 0


def test_verify_single_suite_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--type", "B2",
                           "--suite", "theorem-max", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == [{"type": "B2", "rank": 2, "suite": "theorem-max",
                     "n_checked": 5, "n_passed": 5, "counterexamples": []}]


def test_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "--type", "A1",
                           "--suite", "lattice", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "suite,type,rank,n_checked,n_passed,passed"


def test_verify_deterministic_across_jobs(capsys):
    a = run_cli(capsys, "verify", "--type", "B3", "--suite", "all")
    b = run_cli(capsys, "verify", "--type", "B3", "--suite", "all",
                "--jobs", "4")
    assert a == b


def test_cap_flag_and_env(capsys, monkeypatch):
    code, _, err = run_cli(capsys, "classes", "--type", "A3", "--cap", "10")
    assert code == 2 and "cap" in err and "24" in err
    monkeypatch.setenv("WEYLMAX_CAP", "10")
    code, _, err = run_cli(capsys, "classes", "--type", "A3")
    assert code == 2 and "WEYLMAX_CAP" in err
    # explicit flag overrides the environment
    code, out, _ = run_cli(capsys, "classes", "--type", "A3", "--cap", "100")
    assert code == 0 and "5 conjugacy classes" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "roots.json"
    code, out, _ = run_cli(capsys, "roots", "--type", "A1",
                           "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["type"] == "A1"


def test_byte_identical_reruns(capsys):
    first = run_cli(capsys, "wm", "--type", "F4", "--format", "json")
    second = run_cli(capsys, "wm", "--type", "F4", "--format", "json")
    assert first == second


def test_verify_failure_exit_code(capsys, monkeypatch):
    # force one failing report to exercise the exit-1 path and the
    # counterexample rendering
    from weylmax import CartanType
    from weylmax.wm import CheckReport

    def failing(rs, cap=None, jobs=1):
        return CheckReport("theorem-max", CartanType("A", 2), 3, 2,
                           ("class rep=1 2 ...",))

    monkeypatch.setattr(cli.wm, "theorem_max_check", failing)
    code, out, _ = run_cli(capsys, "verify", "--type", "A2",
                           "--suite", "theorem-max")
    assert code == 1
    assert "[FAIL] theorem-max on A2: 2/3 checks" in out
    assert "counterexample: class rep=1 2 ..." in out


def test_console_script_smoke():
    out = subprocess.run(
        [sys.executable, "-m", "weylmax.cli", "verify", "--type", "A1",
         "--suite", "theorem-max"],
        capture_output=True, text=True)
    assert out.returncode == 0
    assert "[PASS]" in out.stdout


def test_kernel_info(capsys):
    code, out, _ = run_cli(capsys, "--kernel-info")
    assert code == 0
    assert "kernel backend:" in out
