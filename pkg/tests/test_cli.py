import csv
import json

import numpy as np
import pytest

from qbrach import catalog, cli


def run_cli(args):
    return cli.main(args)


class TestListScenarios:
    def test_lists_all(self, capsys):
        assert run_cli(["list-scenarios"]) == 0
        out = capsys.readouterr().out.split()
        for name in ("su2", "so3", "su3-elliptic", "su3-geodesic", "frenet",
                     "su4-heisenberg", "dirac", "sun-family",
                     "su3-partitions"):
            assert name in out


class TestExitCodes:
    def test_unknown_scenario(self, capsys):
        assert run_cli(["run", "--scenario", "nope"]) == 64

    def test_bad_params(self, capsys):
        assert run_cli(["run", "--scenario", "su2",
                        "--param", "bogus=1"]) == 65

    def test_bad_grid(self, capsys):
        assert run_cli(["run", "--scenario", "su2", "--t-max", "0.0001",
                        "--dt", "0.1"]) == 65

    def test_malformed_param(self, capsys):
        assert run_cli(["run", "--scenario", "su2", "--param", "k"]) == 65


class TestRunCsv:
    def test_round_trip(self, tmp_path):
        out = tmp_path / "traj.csv"
        assert run_cli(["run", "--scenario", "su2", "--param", "k=1",
                        "--param", "Omega=0.5", "--t-max", "1.0",
                        "--dt", "1e-2", "--out", str(out)]) == 0
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        scn = catalog.scenario_su2(1.0, 0.5)
        assert len(rows) == 101
        for row in rows[::17]:
            t = float(row["t"])
            psi = scn.state_at(t)
            for j in range(2):
                assert float(row[f"Re c_{j+1}"]) == pytest.approx(
                    psi[j].real, abs=1e-12)
                assert float(row[f"Im c_{j+1}"]) == pytest.approx(
                    psi[j].imag, abs=1e-12)
            assert float(row["norm"]) == pytest.approx(1.0, abs=1e-12)

    def test_columns(self, tmp_path):
        out = tmp_path / "t.csv"
        run_cli(["run", "--scenario", "su2", "--t-max", "0.1",
                 "--dt", "0.05", "--out", str(out)])
        header = out.read_text().splitlines()[0].split(",")
        assert header == ["t", "Re c_1", "Im c_1", "Re c_2", "Im c_2",
                          "trH2", "trHF", "norm", "fidelity_to_target"]

    def test_geodesic_final_fidelity(self, tmp_path):
        out = tmp_path / "g.csv"
        assert run_cli(["run", "--scenario", "su3-geodesic",
                        "--param", "R=1", "--param", "kappa=0.57735",
                        "--t-max", "2.7207", "--dt", "1e-3",
                        "--out", str(out)]) == 0
        last = out.read_text().splitlines()[-1].split(",")
        assert float(last[-1]) >= 1 - 1e-6

    def test_family_run(self, tmp_path):
        out = tmp_path / "f.csv"
        assert run_cli(["run", "--scenario", "sun-family",
                        "--param", "n=3", "--param", "kind=tridiagonal",
                        "--t-max", "0.2", "--dt", "1e-3",
                        "--out", str(out)]) == 0
        header = out.read_text().splitlines()[0].split(",")
        assert header[-1] == "norm"


class TestRunJson:
    def test_json_format(self, tmp_path):
        out = tmp_path / "t.json"
        run_cli(["run", "--scenario", "so3", "--t-max", "0.2",
                 "--dt", "0.1", "--format", "json", "--out", str(out)])
        data = json.loads(out.read_text())
        assert data["columns"][0] == "t"
        assert len(data["rows"]) == 3

    def test_partitions_json(self, tmp_path):
        out = tmp_path / "p.json"
        assert run_cli(["run", "--scenario", "su3-partitions",
                        "--t-max", "2", "--dt", "5e-3",
                        "--format", "json", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert {d["pair"] for d in data} == {1, 2, 3, 4}


class TestVerify:
    def test_gates_suite_json(self, tmp_path):
        out = tmp_path / "r.json"
        assert run_cli(["verify", "--suite", "gates", "--format", "json",
                        "--out", str(out)]) == 0
        env = json.loads(out.read_text())
        assert env["suite"] == "gates"
        assert {r["status"] for r in env["records"]} <= {
            "pass", "fail", "reported-only"}
        assert not any(r["status"] == "fail" for r in env["records"])

    def test_text_format(self, capsys):
        assert run_cli(["verify", "--suite", "gates"]) == 0
        out = capsys.readouterr().out
        assert "reported-only" in out and "0 failures" in out
