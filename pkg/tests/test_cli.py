import json
import subprocess
import sys

import pytest

from unisum.cli import main


def report(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_lfkn_adaptor_example(capsys):
    code, rep = report(capsys, "run", "--protocol", "lfkn-adaptor", "--m", "3", "--g", "square")
    assert code == 0 and rep["ok"]
    assert rep["honest"]["verdict"] == "accept"
    assert rep["honest"]["metrics"]["oracles"] == 6
    assert rep["claim"]["s"] == rep["claim"]["brute_force"]


def test_direct_gemini_example_counts(capsys):
    code, rep = report(capsys, "run", "--protocol", "direct-gemini", "--m", "4", "--g", "identity")
    assert rep["honest"]["metrics"]["oracles"] == 3
    # the final g(y) = s' check compares against mlin values, which the direct fold does not produce
    assert code == 1 and rep["honest"]["failed_checks"] == ["g(y) = s'"]
    code, rep = report(capsys, "run", "--protocol", "direct-adaptor", "--m", "4", "--g", "identity")
    assert code == 0 and rep["honest"]["verdict"] == "accept"


def test_same_seed_same_bytes(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        assert main(["run", "--protocol", "dgm-gemini", "--m", "3", "--seed", "7", "--attack", "tamper-oracle",
                     "--target", "4", "--trials", "5", "--transcript", "--json", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    path = tmp_path / "other.json"
    main(["run", "--protocol", "dgm-gemini", "--m", "3", "--seed", "8", "--json", str(path)])
    assert path.read_bytes() != outs[0]


def test_attack_report_f17(capsys):
    code, rep = report(capsys, "run", "--protocol", "lfkn-adaptor", "--m", "1", "--g", "identity", "--field", "f17",
                       "--attack", "tamper-sum", "--trials", "2000")
    a = rep["attack"]
    assert a["trials"] == 2000 and 0 < a["acceptance_rate"] <= a["limit"]
    assert code == 0


def test_flaw_demo_example(capsys):
    code, rep = report(capsys, "prove", "--protocol", "dgm", "--flaw-demo", "--field", "f17", "--m", "2",
                       "--coeffs", "11,10,8,6")
    assert code == 0
    assert rep["uncorrected"]["value_at_2"] == 14 and rep["target"]["value_at_2"] == 16
    assert rep["corrected"]["mismatches"] == 0 and rep["uncorrected"]["degree"] == 4


def test_standalone_adaptor_with_point(capsys):
    code, rep = report(capsys, "prove", "--protocol", "adaptor", "--z", "1,2,3")
    assert code == 0
    assert rep["honest"]["metrics"]["queries"] == 10 and rep["honest"]["metrics"]["field_elements"] == 0


def test_kappa_schedule_and_extra_inputs(capsys):
    code, rep = report(capsys, "run", "--protocol", "direct-kappa", "--m", "4", "--schedule", "1,1,1,1",
                       "--g", "square", "--q", "2")
    assert rep["config"]["q"] == 2 and rep["honest"]["metrics"]["oracles"] == 4
    assert rep["assertions"]["costs match formula"]


def test_bench_small_range(capsys):
    code, rep = report(capsys, "bench", "--protocol", "adaptor-only", "--m-range", "6:9")
    assert [r["m"] for r in rep["rows"]] == [6, 7, 8, 9]
    assert all(1.8 <= r["ratio"] <= 2.2 for r in rep["rows"][1:])
    assert code == 0 and "wall_seconds" not in rep["rows"][0]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["run", "--m", "5", "--field", "f17"])
    assert e.value.code != 0
    with pytest.raises(SystemExit) as e:
        main(["run", "--protocol", "nope"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["run", "--g", "product2", "--q", "1"])
    assert e.value.code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "unisum", "run", "--protocol", "aurora", "--m", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["honest"]["metrics"]["oracles"] == 2
