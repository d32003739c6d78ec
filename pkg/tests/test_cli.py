"""Tests for the command-line driver: flags, exit codes, report shape."""

import json

import pytest

import gtkit.cli as cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCount:
    def test_initial_condition(self, capsys):
        code, out = run_cli(
            capsys, "count", "--r", "0", "--n", "3", "--c", "2", "--ks", "0,1,2"
        )
        assert code == 0
        report = json.loads(out)
        values = {r["provenance"]: r["value"] for r in report["results"]}
        assert values["bruteforce"] == "1"
        assert values["recursion"] == "1"

    def test_both_engines_agree(self, capsys):
        code, out = run_cli(
            capsys, "count", "--r", "1", "--n", "2", "--c", "2", "--ks", "1",
            "--engine", "both",
        )
        assert code == 0
        report = json.loads(out)
        assert {r["value"] for r in report["results"]} == {"4"}
        assert report["verdicts"] == [
            {"identity": "engine agreement", "parameters": "F(1,2,2;1)",
             "pass": True}
        ]

    def test_q_rendering(self, capsys):
        code, out = run_cli(
            capsys, "count", "--r", "1", "--n", "2", "--c", "1", "--ks", "1",
            "--q", "--engine", "brute",
        )
        assert code == 0
        report = json.loads(out)
        assert report["results"][0]["value"] == "q + q^2"

    def test_engine_mismatch_exit_code(self, capsys, monkeypatch):
        from fractions import Fraction

        monkeypatch.setattr(cli.counting, "f_recursive",
                            lambda key, memo=None: Fraction(999))
        code, out = run_cli(
            capsys, "count", "--r", "1", "--n", "2", "--c", "2", "--ks", "1",
            "--engine", "both",
        )
        assert code == cli.EXIT_ENGINE_MISMATCH
        report = json.loads(out)
        assert report["verdicts"][0]["pass"] is False

    def test_dump_patterns(self, capsys):
        code, out = run_cli(
            capsys, "count", "--r", "1", "--n", "2", "--c", "2", "--ks", "1",
            "--engine", "brute", "--dump-patterns",
        )
        assert code == 0
        report = json.loads(out)
        dumps = [r for r in report["results"] if r["provenance"] == "enumeration"]
        assert len(dumps) == 4
        first = json.loads(dumps[0]["value"])
        assert first["kind"] == "gen_pattern"
        assert first["r"] == 1 and first["n"] == 2 and first["c"] == 2

    def test_bad_flags_exit_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["count", "--r", "x", "--n", "2", "--c", "2"])
        assert exc.value.code == 2

    def test_inconsistent_key_exit_two(self, capsys):
        code, _ = run_cli(
            capsys, "count", "--r", "1", "--n", "3", "--c", "2", "--ks", "1"
        )
        assert code == 2


class TestTable:
    def test_csv_rows(self, capsys):
        code, out = run_cli(
            capsys, "table", "--n", "2", "--c", "2", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,c,k,brute,formula,match"
        assert lines[1:] == [
            "2,2,0,3,3,true",
            "2,2,1,4,4,true",
            "2,2,2,3,3,true",
        ]

    def test_n1_rows_all_one(self, capsys):
        code, out = run_cli(
            capsys, "table", "--n", "1", "--c", "3", "--format", "csv"
        )
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            fields = line.split(",")
            assert fields[3] == fields[4] == "1"

    def test_negative_k_row_shows_zero(self, capsys):
        code, out = run_cli(
            capsys, "table", "--n", "2", "--c", "2",
            "--kmin", "-1", "--kmax", "-1", "--format", "csv",
        )
        assert code == 0
        assert out.strip().splitlines()[1] == "2,2,-1,0,0,true"

    def test_json_report(self, capsys):
        code, out = run_cli(capsys, "table", "--n", "2", "--c", "1")
        assert code == 0
        report = json.loads(out)
        assert all(v["pass"] for v in report["verdicts"])

    def test_range_spec(self, capsys):
        code, out = run_cli(
            capsys, "table", "--n", "1:2", "--c", "0:1", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()[1:]
        assert len(lines) == 1 + 2 + 1 + 2  # (n,c) in {1,2} x {0,1}, k in 0..c


class TestVerify:
    def test_hyper_suite_passes_with_note(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "hyper")
        assert code == 0
        report = json.loads(out)
        assert all(v["pass"] for v in report["verdicts"])
        notes = [r for r in report["results"]
                 if r["label"] == "displayed-final-expression discrepancy"]
        assert len(notes) == 1
        assert "6" in notes[0]["value"] and "10" in notes[0]["value"]

    def test_qpoch_suite(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "qpoch")
        assert code == 0

    def test_determinism(self, capsys):
        code1, out1 = run_cli(capsys, "verify", "--suite", "lemma2", "--seed", "42")
        code2, out2 = run_cli(capsys, "verify", "--suite", "lemma2", "--seed", "42")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(cli.identities, "verify_qpoch_sum",
                            lambda n, y: False)
        code, out = run_cli(capsys, "verify", "--suite", "qpoch")
        assert code == cli.EXIT_VERIFICATION_FAILED
        report = json.loads(out)
        failing = [v for v in report["verdicts"] if not v["pass"]]
        assert failing and "counterexample" in failing[0]

    def test_override(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--suite", "qvand", "--override", "qvand_max_m=2"
        )
        assert code == 0
        report = json.loads(out)
        assert "m <= 2" in report["verdicts"][0]["parameters"]

    def test_bad_override_exit_two(self, capsys):
        code, _ = run_cli(
            capsys, "verify", "--suite", "qvand", "--override", "nonsense=1"
        )
        assert code == 2

    def test_unknown_suite_exit_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--suite", "bogus"])
        assert exc.value.code == 2

    def test_thread_cap_respected(self, capsys, monkeypatch):
        monkeypatch.setenv("GTKIT_THREADS", "4")
        code1, out1 = run_cli(capsys, "verify", "--suite", "extra")
        monkeypatch.setenv("GTKIT_THREADS", "1")
        code2, out2 = run_cli(capsys, "verify", "--suite", "extra")
        assert code1 == code2 == 0
        assert out1 == out2
