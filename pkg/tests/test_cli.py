"""Command-line surface: outputs, exit codes, determinism."""

import json
from pathlib import Path

import pytest

from hyparr.cli import main

FIXDIR = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestQueries:
    def test_tutte_b2(self, capsys):
        code, out, _ = run(capsys, "tutte", str(FIXDIR / "b2.json"))
        assert code == 0
        assert json.loads(out) == {"terms": [{"c": 1, "x": 2, "y": 0}]}

    def test_betti_k3(self, capsys):
        code, out, _ = run(capsys, "betti", str(FIXDIR / "k3.json"))
        assert code == 0
        data = json.loads(out)
        assert data["smooth"] == [1, 1, 1]
        assert data["ih"] == [1, 1]
        assert data["residuals"] == {"decomposition": [], "kl": []}
        assert data["local_ih"]["1,2,3"] == [1, 1]

    def test_charpoly_nu4(self, capsys):
        code, out, _ = run(capsys, "charpoly", str(FIXDIR / "nu4.json"))
        data = json.loads(out)
        assert code == 0
        assert data["coeffs"] == [3, -4, 1]
        assert data["num_regions"] == 8

    def test_info_flags(self, capsys):
        code, out, _ = run(capsys, "info", str(FIXDIR / "rep4.json"))
        data = json.loads(out)
        assert code == 0
        assert data["flags"]["is_unimodular"]
        assert not data["flags"]["is_simple"]
        assert data["k"] == 2

    def test_flats_and_circuits(self, capsys):
        code, out, _ = run(capsys, "flats", str(FIXDIR / "rep4.json"))
        data = json.loads(out)
        assert code == 0
        assert {"members": [2, 3], "rank": 1, "corank": 1, "moebius": -1} in data["flats"]
        code, out, _ = run(capsys, "circuits", str(FIXDIR / "rep4.json"))
        data = json.loads(out)
        assert {"members": [2, 3], "lambda": [1, -1]} in data["circuits"]

    def test_count_smooth(self, capsys):
        code, out, _ = run(capsys, "count", str(FIXDIR / "k3.json"),
                           "--q", "2", "--what", "smooth")
        data = json.loads(out)
        assert code == 0
        assert data["normalized"] == 28 and data["match"]

    def test_count_stratum(self, capsys):
        code, out, _ = run(capsys, "count", str(FIXDIR / "k3.json"),
                           "--q", "2", "--what", "stratum")
        data = json.loads(out)
        assert data["normalized"] == 12 and data["match"]

    def test_groebner(self, capsys):
        code, out, _ = run(capsys, "groebner", str(FIXDIR / "nu4.json"),
                           "--order", "lex")
        data = json.loads(out)
        assert code == 0
        assert data["krull_dimension"] == 1

    def test_groebner_with_forms(self, capsys):
        code, out, _ = run(capsys, "groebner", str(FIXDIR / "k3.json"),
                           "--order", "grevlex", "--linear-forms", "auto")
        data = json.loads(out)
        assert data["hilbert_polynomial"] == [1, 1]


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("tutte", "k4.json"),
        ("betti", "rep4.json"),
        ("flats", "nu4.json"),
        ("count", "k3.json", "--q", "3", "--what", "smooth"),
    ])
    def test_byte_identical_runs(self, capsys, argv):
        argv = [a if not a.endswith(".json") else str(FIXDIR / a) for a in argv]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


class TestVerify:
    def test_suite_all_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all", str(FIXDIR))
        report = json.loads(out)
        assert code == 0
        assert report["status"] == "pass"
        names = [c["name"] for c in report["checks"]]
        assert names == sorted(names)
        assert all(c["status"] in ("pass", "warn") for c in report["checks"])

    def test_inadmissible_primes_warn_not_fail(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "counts")
        report = json.loads(out)
        assert code == 0
        warned = [c for c in report["checks"] if c["status"] == "warn"]
        assert any("nu4" in c["name"] and "q=2" in c["name"] for c in warned)

    def test_threaded_run_matches_serial(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "verify", "--suite", "krs")
        serial = json.loads(out)
        monkeypatch.setenv("HYPARR_THREADS", "4")
        code2, out2, _ = run(capsys, "verify", "--suite", "krs")
        threaded = json.loads(out2)
        strip = lambda rep: [(c["name"], c["status"], c["expected"], c["actual"])
                             for c in rep["checks"]]
        assert strip(serial) == strip(threaded)
        assert code == code2 == 0


class TestErrors:
    def test_malformed_json_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json", encoding="utf-8")
        code, _, err = run(capsys, "info", str(bad))
        assert code == 2
        assert "malformed JSON" in err

    def test_invalid_arrangement_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "zero.json"
        bad.write_text(json.dumps({
            "d": 2, "n": 1, "columns": [[0, 0]], "offsets": [0]}),
            encoding="utf-8")
        code, _, err = run(capsys, "info", str(bad))
        assert code == 2
        assert "invalid arrangement" in err

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["count", "nope.json", "--what", "everything", "--q", "2"])
        assert exc.value.code == 2

    def test_inadmissible_count_exits_1(self, capsys):
        code, _, err = run(capsys, "count", str(FIXDIR / "nu4.json"),
                           "--q", "2", "--what", "complement")
        assert code == 1
        assert "unreliable" in err
