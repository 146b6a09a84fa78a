import json

import pytest

from vvkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write_points(tmp_path, capsys, label, seed):
    code, out = run_cli(capsys, "sample", "--class", label, "--seed", str(seed))
    assert code == 0
    path = tmp_path / "pts.json"
    path.write_text(out)
    return str(path)


class TestSubcommands:
    def test_sample_and_classify(self, tmp_path, capsys):
        path = write_points(tmp_path, capsys, "5-4", 3)
        code, out = run_cli(capsys, "classify", path)
        assert code == 0
        report = json.loads(out)
        assert report["label"] == 4 and report["profile"] == [3]

    def test_points_ideal_and_gb(self, tmp_path, capsys):
        path = write_points(tmp_path, capsys, "5-2", 1)
        code, out = run_cli(capsys, "points-ideal", path)
        assert code == 0
        ideal_path = tmp_path / "ideal.json"
        ideal_path.write_text(json.dumps(json.loads(out)["ideal"]))
        code, out = run_cli(capsys, "gb", str(ideal_path), "--order", "degrevlex")
        assert code == 0
        assert json.loads(out)["basis"]

    def test_hilbert(self, tmp_path, capsys):
        ideal_path = tmp_path / "ideal.json"
        ideal_path.write_text(json.dumps(
            {"ring": {"vars": ["x", "y", "z"]}, "gens": ["z", "x^4 + y^4"]}))
        code, out = run_cli(capsys, "hilbert", str(ideal_path))
        assert code == 0
        report = json.loads(out)
        assert report["series"] == {"numerator": [1, 1, 1, 1], "pole_order": 1}

    def test_vv_check_exit_codes(self, tmp_path, capsys):
        free = write_points(tmp_path, capsys, "5-1", 11)
        code, out = run_cli(capsys, "vv-check", free)
        assert code == 0 and json.loads(out)["torsion_free"]
        torsion = write_points(tmp_path, capsys, "5-2", 11)
        code, out = run_cli(capsys, "vv-check", torsion)
        assert code == 1
        report = json.loads(out)
        assert not report["torsion_free"]
        assert report["per_t"][0]["witness"]

    def test_vv_check_tmax(self, tmp_path, capsys):
        path = write_points(tmp_path, capsys, "4-general", 2)
        code, out = run_cli(capsys, "vv-check", path, "--tmax", "2")
        assert code in (0, 1)
        assert len(json.loads(out)["per_t"]) <= 1 or json.loads(out)["tmax"] == 2

    def test_relation_type(self, tmp_path, capsys):
        path = write_points(tmp_path, capsys, "5-collinear", 2)
        code, out = run_cli(capsys, "relation-type", path, "--bound", "5")
        assert code == 0
        assert json.loads(out)["relation_type"] == 5

    def test_mpower(self, tmp_path, capsys):
        ideal_path = tmp_path / "ideal.json"
        ideal_path.write_text(json.dumps(
            {"ring": {"vars": ["x", "y", "z"]}, "gens": ["x"]}))
        code, out = run_cli(capsys, "mpower", str(ideal_path), "--e", "3")
        assert code == 1 and json.loads(out)["contained"] is False

    def test_jacobian(self, tmp_path, capsys):
        path = write_points(tmp_path, capsys, "5-3", 4)
        code, out = run_cli(capsys, "jacobian", path)
        assert code == 0
        report = json.loads(out)
        assert report["theta"] and report["jacobian_ideal"]["gens"]

    def test_repro_r15b(self, capsys):
        code, out = run_cli(capsys, "repro", "R15b")
        assert code == 0
        assert json.loads(out)["status"] == "pass"

    def test_repro_alias(self, capsys):
        code, out = run_cli(capsys, "repro", "T22-claim")
        assert code == 0
        assert json.loads(out)["claim"] == "T22"

    def test_repro_conj_indeterminate(self, capsys):
        code, out = run_cli(capsys, "conjecture", "--d", "3", "--seed", "2",
                            "--trials", "1")
        assert code == 0
        assert json.loads(out)["status"] == "indeterminate"

    def test_slow_claim_gated(self, capsys):
        code, _ = run_cli(capsys, "repro", "T24")
        assert code == 2


class TestDeterminismAndErrors:
    def test_byte_identical_output(self, tmp_path, capsys):
        path = write_points(tmp_path, capsys, "5-5", 9)
        _, first = run_cli(capsys, "classify", path)
        _, second = run_cli(capsys, "classify", path)
        assert first == second

    def test_unknown_claim(self, capsys):
        code, _ = run_cli(capsys, "repro", "NOPE")
        assert code == 2

    def test_missing_file(self, capsys):
        code, _ = run_cli(capsys, "classify", "/nonexistent.json")
        assert code == 2

    def test_malformed_ideal(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"ring": {"vars": ["x"]}, "gens": ["x +"]}))
        code, _ = run_cli(capsys, "gb", str(bad))
        assert code == 2

    def test_usage_error(self, capsys):
        code = main(["gb"])
        assert code == 2
