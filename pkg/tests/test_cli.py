import json
import subprocess
import sys

import pytest

from invcheck.cli import main, run


def test_verify_family_passes(capsys):
    code, report = run(["verify", "--catalog", "IG"])
    assert code == 0
    assert report["summary"] == {"pass": 7, "fail": 0, "skipped": 0, "report_only_fail": 0}
    assert "PASS     IG-1" in capsys.readouterr().out


def test_unknown_filter_is_empty_success(capsys):
    code, report = run(["verify", "--catalog", "ZZ"])
    assert code == 0 and report["results"] == []
    assert "warning" in capsys.readouterr().err


def test_failures_exit_one():
    code, report = run(["verify", "--catalog", "CW-3"])
    assert code == 1
    assert report["results"][0]["witness"]


def test_usage_error_exits_two():
    assert main(["verify", "--method", "bogus"]) == 2
    assert main(["curve", "--which", "E1t", "--op", "disc"]) == 2


def test_schema(tmp_path):
    out = tmp_path / "r.json"
    assert main(["qseries", "--json", str(out), "--seed", "5"]) == 0
    data = json.loads(out.read_text())
    assert data["schema_version"] == 1 and data["seed"] == 5
    assert set(data["summary"]) == {"pass", "fail", "skipped", "report_only_fail"}
    for r in data["results"]:
        assert {"id", "family", "status", "elapsed_ms", "anchor"} <= set(r)


def test_strict_promotes_report_only(monkeypatch):
    from invcheck import qseries

    real = qseries.picard_fuchs_r_form

    def broken(n=12):
        r = real(n)
        r.status = "fail"
        return r

    monkeypatch.setattr(qseries, "picard_fuchs_r_form", broken)
    code, rep = run(["qseries", "--check", "rform"])
    assert code == 0 and rep["summary"]["report_only_fail"] == 1
    code, rep = run(["qseries", "--check", "rform", "--strict"])
    assert code == 1


def test_curve_commands():
    _, rep = run(["curve", "--which", "E2t", "--op", "mul:3"])
    assert rep["curve"]["point"] == "O"
    _, rep = run(["curve", "--which", "deuring", "--op", "disc"])
    assert rep["curve"]["disc"] == "alpha^3 - 27"
    code, rep = run(["curve", "--which", "E", "--op", "lutznagell", "--at", "1,2,3"])
    assert code == 0 and rep["curve"]["lutz_nagell"]["P"] == ["-5148", "373464"]


def test_group_command():
    code, rep = run(["group", "--name", "g4", "--expect", "216"])
    assert code == 0
    assert rep["group"]["matrix_order"] == 2592 and rep["group"]["center_order"] == 12


def test_json_to_stdout_is_clean():
    proc = subprocess.run(
        [sys.executable, "-m", "invcheck", "verify", "--catalog", "KL", "--json", "-"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["pass"] == 5


@pytest.mark.parametrize("argv", [["verify", "--catalog", "W", "--method", "random"], ["lines"]])
def test_byte_identical_reports(tmp_path, argv):
    texts = []
    for i in range(2):
        path = tmp_path / f"{i}.json"
        subprocess.run([sys.executable, "-m", "invcheck", *argv, "--seed", "3", "--no-timing", "--json", str(path)], capture_output=True)
        texts.append(path.read_bytes())
    assert texts[0] == texts[1]
