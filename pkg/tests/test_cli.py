"""CLI subcommands, file formats, exit codes and determinism."""

import json
import math

import pytest

import qcwaves.cli as cli
from qcwaves import (
    QcMaterial,
    fundamental_displacement,
    fundamental_traction,
    green_displacement,
    halfplane_freefield,
)
from qcwaves.scenario import (
    Scenario,
    load_material,
    load_scenario,
    parse_scenario,
    run_scenario,
    scenario_points,
    scenario_to_dict,
)

MATERIAL = {"schema_version": 1, "c44": 2.0, "R3": 1.0, "K2": 2.0, "rho": 1.0}


@pytest.fixture
def material_file(tmp_path):
    path = tmp_path / "material.json"
    path.write_text(json.dumps(MATERIAL))
    return str(path)


def write_scenario(tmp_path, doc, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def fundamental_scenario(n1=50, n2=50):
    return {
        "schema_version": 1,
        "kind": "fundamental",
        "omega": 2.0,
        "source": [0.0, 0.0],
        "grid": {"x1": [0.1, 5.0, n1], "x2": [0.1, 5.0, n2]},
        "outputs": ["displacement"],
    }


class TestSample:
    def test_grid_row_count(self, tmp_path, material_file):
        scenario = write_scenario(tmp_path, fundamental_scenario())
        out = str(tmp_path / "field.csv")
        assert cli.main(["sample", "--material", material_file,
                         "--scenario", scenario, "--out", out]) == 0
        lines = open(out).read().splitlines()
        assert len(lines) == 2501  # header + 50*50 rows
        assert lines[0] == ("x1,x2,u31_re,u31_im,u32_re,u32_im,"
                            "w31_re,w31_im,w32_re,w32_im")

    def test_values_match_library_bit_for_bit(self, tmp_path, material_file):
        doc = fundamental_scenario(6, 5)
        doc["outputs"] = ["displacement", "traction"]
        doc["normal"] = [0.0, 1.0]
        scenario_path = write_scenario(tmp_path, doc)
        out = str(tmp_path / "field.csv")
        assert cli.main(["sample", "--material", material_file,
                         "--scenario", scenario_path, "--out", out]) == 0
        m = QcMaterial(**{k: MATERIAL[k] for k in ("c44", "R3", "K2", "rho")})
        s = load_scenario(scenario_path)
        lines = open(out).read().splitlines()[1:]
        points = scenario_points(s)
        assert len(lines) == len(points)
        for line, p in zip(lines, points):
            vals = [float(tok) for tok in line.split(",")]
            assert vals[0] == p[0] and vals[1] == p[1]
            v = fundamental_displacement(m, p, (0.0, 0.0), 2.0)
            expect = []
            for z in (v[0, 0], v[0, 1], v[1, 0], v[1, 1]):
                expect += [z.real, z.imag]
            t = fundamental_traction(m, p, (0.0, 0.0), 2.0, (0.0, 1.0))
            for z in (t[0, 0], t[0, 1], t[1, 0], t[1, 1]):
                expect += [z.real, z.imag]
            assert vals[2:] == expect  # exact equality, not approx

    def test_grid_containing_source_is_evaluation_error(self, tmp_path, material_file, capsys):
        doc = fundamental_scenario(3, 3)
        doc["grid"] = {"x1": [-1.0, 1.0, 3], "x2": [-1.0, 1.0, 3]}
        scenario = write_scenario(tmp_path, doc)
        out = str(tmp_path / "field.csv")
        code = cli.main(["sample", "--material", material_file,
                         "--scenario", scenario, "--out", out])
        assert code == 3
        assert "[0.0, 0.0]" in capsys.readouterr().err

    def test_halfplane_source_above_boundary_is_validation_error(self, tmp_path, material_file, capsys):
        doc = fundamental_scenario(3, 3)
        doc["kind"] = "green-half"
        doc["source"] = [0.0, 0.5]
        doc["grid"] = {"x1": [-1.0, 1.0, 3], "x2": [-2.0, -0.5, 3]}
        scenario = write_scenario(tmp_path, doc)
        out = str(tmp_path / "field.csv")
        code = cli.main(["sample", "--material", material_file,
                         "--scenario", scenario, "--out", out])
        assert code == 2
        assert not (tmp_path / "field.csv").exists()  # rejected before evaluation

    def test_deterministic_output(self, tmp_path, material_file):
        scenario = write_scenario(tmp_path, fundamental_scenario(10, 10))
        out_a = str(tmp_path / "a.csv")
        out_b = str(tmp_path / "b.csv")
        cli.main(["sample", "--material", material_file, "--scenario", scenario,
                  "--out", out_a, "--no-sidecar"])
        cli.main(["sample", "--material", material_file, "--scenario", scenario,
                  "--out", out_b, "--no-sidecar"])
        assert open(out_a, "rb").read() == open(out_b, "rb").read()

    def test_sidecar_round_trips_scenario(self, tmp_path, material_file):
        doc = {
            "schema_version": 1,
            "kind": "freefield-half",
            "omega": 3.0,
            "wave": {"mode": "S2", "amplitude": [0.5, -0.25], "phi": 0.9},
            "points": [[0.0, -1.0], [2.0, 0.0]],
            "outputs": ["displacement", "traction"],
            "normal": [0.0, 1.0],
        }
        scenario_path = write_scenario(tmp_path, doc)
        out = str(tmp_path / "field.csv")
        assert cli.main(["sample", "--material", material_file,
                         "--scenario", scenario_path, "--out", out]) == 0
        sidecar = json.load(open(out + ".meta.json"))
        assert sidecar["generator"]["package"] == "qcwaves"
        assert sidecar["material"] == MATERIAL
        original = load_scenario(scenario_path)
        echoed = parse_scenario(sidecar["scenario"])
        assert echoed == original

    def test_freefield_csv_matches_library(self, tmp_path, material_file):
        doc = {
            "schema_version": 1,
            "kind": "freefield-half",
            "omega": 3.0,
            "wave": {"mode": "S1", "amplitude": [1.0, 0.0], "phi": 0.7},
            "points": [[0.3, -0.8]],
            "outputs": ["displacement"],
        }
        scenario_path = write_scenario(tmp_path, doc)
        out = str(tmp_path / "f.csv")
        cli.main(["sample", "--material", material_file,
                  "--scenario", scenario_path, "--out", out])
        lines = open(out).read().splitlines()
        assert lines[0] == "x1,x2,u3_re,u3_im,w3_re,w3_im"
        vals = [float(t) for t in lines[1].split(",")]
        m = QcMaterial(**{k: MATERIAL[k] for k in ("c44", "R3", "K2", "rho")})
        s = load_scenario(scenario_path)
        f = halfplane_freefield(m, s.wave, 3.0, (0.3, -0.8))
        assert vals[2:] == [f.u3.real, f.u3.imag, f.w3.real, f.w3.imag]

    def test_malformed_scenario_is_parse_error(self, tmp_path, material_file):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert cli.main(["sample", "--material", material_file,
                         "--scenario", str(path), "--out", str(tmp_path / "x.csv")]) == 2
        missing = write_scenario(tmp_path, {"schema_version": 1, "kind": "fundamental"},
                                 "missing.json")
        assert cli.main(["sample", "--material", material_file,
                         "--scenario", missing, "--out", str(tmp_path / "x.csv")]) == 2


class TestDecompose:
    def test_symmetric_material_table(self, material_file, capsys):
        assert cli.main(["decompose", "--material", material_file]) == 0
        out = capsys.readouterr().out
        assert "a1 = 3" in out and "a2 = 1" in out
        assert "45 deg" in out

    def test_decoupled_material_notes_continuity_rule(self, tmp_path, capsys):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"schema_version": 1, "c44": 2.0, "R3": 0.0,
                                    "K2": 1.0, "rho": 1.0}))
        assert cli.main(["decompose", "--material", str(path)]) == 0
        assert "continuity rule" in capsys.readouterr().out

    def test_zero_frequency_rejected(self, material_file, capsys):
        assert cli.main(["decompose", "--material", material_file, "--omega", "0.0"]) == 2

    def test_wave_parameter_table(self, material_file, capsys):
        assert cli.main(["decompose", "--material", material_file, "--omega", "1.0,2.0"]) == 0
        out = capsys.readouterr().out
        assert f"{1.0 / math.sqrt(3.0):.10g}"[:8] in out


class TestVerify:
    def test_default_suite_exits_zero(self, material_file, tmp_path, capsys):
        report_path = str(tmp_path / "report.json")
        code = cli.main(["verify", "--material", material_file,
                         "--omega", "1.0,10.0", "--report", report_path])
        assert code == 0
        report = json.load(open(report_path))
        assert report["all_passed"] is True
        assert report["omega"] == [1.0, 10.0]
        assert {c["name"] for c in report["checks"]} == set(cli.SUITES)
        skipped = [c for c in report["checks"] if c["status"] == "skipped"]
        assert {c["name"] for c in skipped} == {"decoupling"}  # R3 != 0

    def test_decoupling_suite_runs_at_r3_zero(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"schema_version": 1, "c44": 2.0, "R3": 0.0,
                                    "K2": 1.0, "rho": 1.0}))
        report_path = str(tmp_path / "report.json")
        code = cli.main(["verify", "--material", str(path), "--suite", "decoupling",
                         "--report", report_path])
        assert code == 0
        report = json.load(open(report_path))
        assert report["checks"][0]["status"] == "pass"

    def test_broken_material_is_validation_error(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"schema_version": 1, "c44": 1.0, "R3": 2.0,
                                    "K2": 1.0, "rho": 1.0}))
        assert cli.main(["verify", "--material", str(path)]) == 2

    def test_unknown_suite_rejected(self, material_file):
        assert cli.main(["verify", "--material", material_file,
                         "--suite", "nonsense"]) == 2

    def test_failed_check_exits_four(self, material_file, monkeypatch):
        def failing(m, omega, rng, seed):
            return {"name": "reciprocity", "status": "fail"}

        monkeypatch.setattr(cli, "_suite_reciprocity", failing)
        code = cli.main(["verify", "--material", material_file,
                         "--suite", "reciprocity"])
        assert code == 4

    def test_seed_recorded_and_deterministic(self, material_file, tmp_path):
        paths = [str(tmp_path / f"r{i}.json") for i in range(2)]
        for p in paths:
            cli.main(["verify", "--material", material_file, "--suite",
                      "reciprocity,dirac-flux", "--seed", "123", "--report", p])
        a, b = (json.load(open(p)) for p in paths)
        assert a == b
        assert a["seed"] == 123


class TestScenarioParsing:
    def test_unsupported_schema_version(self, tmp_path, material_file):
        doc = fundamental_scenario()
        doc["schema_version"] = 99
        path = write_scenario(tmp_path, doc)
        assert cli.main(["sample", "--material", material_file, "--scenario", path,
                         "--out", str(tmp_path / "x.csv")]) == 2

    def test_grid_and_points_are_exclusive(self):
        doc = fundamental_scenario()
        doc["points"] = [[1.0, 1.0]]
        with pytest.raises(Exception):
            parse_scenario(doc)

    def test_round_trip_identity(self):
        doc = {
            "schema_version": 1,
            "kind": "green-half",
            "omega": 5.5,
            "source": [0.25, -1.5],
            "grid": {"x1": [-1.0, 1.0, 7], "x2": [-3.0, 0.0, 5]},
            "outputs": ["displacement"],
        }
        s = parse_scenario(doc)
        assert parse_scenario(scenario_to_dict(s)) == s

    def test_run_scenario_counts_rows(self, tmp_path):
        m = QcMaterial(c44=2.0, R3=1.0, K2=2.0, rho=1.0)
        s = Scenario(kind="green-half", omega=2.0, source=(0.0, -1.0),
                     points=((0.5, -0.5), (1.0, 0.0)))
        out = tmp_path / "g.csv"
        assert run_scenario(s, m, str(out)) == 2
        g = green_displacement(m, (0.5, -0.5), (0.0, -1.0), 2.0)
        first = [float(t) for t in open(out).read().splitlines()[1].split(",")]
        assert first[2] == g[0, 0].real and first[3] == g[0, 0].imag


def test_material_file_errors(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"schema_version": 1, "c44": "big", "R3": 0.1,
                                "K2": 1.0, "rho": 1.0}))
    with pytest.raises(Exception):
        load_material(str(path))
    path.write_text(json.dumps({"schema_version": 1}))
    with pytest.raises(Exception):
        load_material(str(path))
