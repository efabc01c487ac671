import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from qwell_carnot.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestCycle:
    def test_free_particle(self, capsys):
        code, out, _ = run(capsys, "cycle", "--l1", "1", "--l3", "4", "--lambda", "0")
        assert code == 0
        assert {r["key"]: r["value"] for r in rows(out)}["eta"] == "0.75"

    def test_poschl_teller_json(self, capsys):
        code, out, _ = run(capsys, "cycle", "--l1", "1", "--l3", "3", "--lambda", "1", "--out", "json")
        assert code == 0
        data = json.loads(out)
        assert list(data) == ["L2", "L4", "E_H", "E_C", "W12", "W23", "W34", "W41", "W_total", "Q_H", "eta"]
        assert data["eta"] == 0.75

    def test_degenerate(self, capsys):
        code, out, err = run(capsys, "cycle", "--l1", "1", "--l3", "1.5", "--lambda", "0")
        assert code == 2
        assert out == ""
        assert len(err.strip().splitlines()) == 1

    @pytest.mark.parametrize(
        "argv",
        [
            ["cycle", "--l1", "1"],
            ["cycle", "--l1", "-1", "--l3", "4"],
            ["cycle", "--l1", "1", "--l3", "4", "--lambda", "-0.5"],
            ["cycle", "--l1", "1", "--l3", "4", "--hbar", "2"],
            ["cycle", "--l1", "1", "--l3", "4", "--precision", "0"],
            ["cycle", "--l1", "1", "--l3", "4", "--out", "xml"],
            ["bogus"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_si_units(self, capsys):
        code, out, _ = run(capsys, "cycle", "--l1", "1e-9", "--l3", "4e-9", "--units", "si")
        assert code == 0
        values = {r["key"]: float(r["value"]) for r in rows(out)}
        assert values["eta"] == pytest.approx(0.75, abs=1e-12)
        assert values["E_H"] == pytest.approx(math.pi**2 * 1.054571817e-34**2 / (2 * 9.1093837015e-31 * 1e-18), rel=1e-11)


class TestDiagram:
    def test_rows(self, capsys):
        code, out, _ = run(capsys, "diagram", "--l1", "1", "--l3", "4", "--samples", "2")
        assert code == 0
        table = rows(out)
        assert len(table) == 8
        assert (table[0]["leg"], float(table[0]["L"])) == ("1", 1.0)
        assert float(table[0]["P"]) == pytest.approx(math.pi**2, rel=1e-11)
        assert float(table[3]["L"]) == 4.0
        assert float(table[3]["P"]) == pytest.approx(math.pi**2 / 16, rel=1e-11)

    @pytest.mark.parametrize("samples", [2, 5, 33])
    def test_row_count_and_corners(self, capsys, samples):
        _, out, _ = run(capsys, "diagram", "--l1", "0.5", "--l3", "3", "--lambda", "0.7", "--samples", str(samples))
        table = rows(out)
        assert len(table) == 4 * samples
        legs = [table[i * samples:(i + 1) * samples] for i in range(4)]
        for i in range(4):
            end, start = legs[i][-1], legs[(i + 1) % 4][0]
            assert [end[k] for k in "L P E a1sq".split()] == [start[k] for k in "L P E a1sq".split()]

    def test_samples_too_small(self, capsys):
        assert run(capsys, "diagram", "--l1", "1", "--l3", "4", "--samples", "1")[0] == 2


class TestSweep:
    def test_l3_list(self, capsys):
        code, out, _ = run(capsys, "sweep", "--l1", "1", "--lambda", "0", "--l3-list", "4,8")
        assert code == 0
        assert [float(r["eta"]) for r in rows(out)] == [0.75, 0.9375]

    def test_lambda_limit(self, capsys):
        _, out, _ = run(capsys, "sweep", "--l1", "1", "--l3", "4", "--lambda-list", "1e-6")
        (row,) = rows(out)
        assert abs(float(row["eta"]) - 0.75) <= 1e-5

    def test_degenerate_rows_marked(self, capsys):
        code, out, _ = run(capsys, "sweep", "--l1", "1", "--lambda", "0", "--l3-list", "1.5,2,3", "--out", "json")
        assert code == 0
        data = json.loads(out)
        assert [r["status"] for r in data] == ["degenerate", "degenerate", "ok"]
        assert data[0]["eta"] is None

    @pytest.mark.parametrize(
        "extra",
        [
            ["--l3-list", ""],
            ["--l3-list", "4,3,5"],
            ["--l3", "4"],
            ["--l3", "4", "--l3-list", "4", "--lambda-list", "0"],
        ],
    )
    def test_bad_ranges(self, capsys, extra):
        assert run(capsys, "sweep", "--l1", "1", *extra)[0] == 2


class TestVerify:
    def test_rows_and_exit(self, capsys):
        code, out, _ = run(capsys, "verify", "--l1", "1", "--l3", "4", "--lambda", "0")
        assert code == 0
        table = {r["key"]: r for r in rows(out) if r["kind"] == "row"}
        assert len(table) == 5
        assert float(table["a_work_total"]["rel_dev"]) <= 1e-8
        e = table["e_eta_cubic"]
        assert (float(e["reference"]), float(e["comparator"])) == (0.75, 0.9375)

    def test_poschl_teller_heat(self, capsys):
        _, out, _ = run(capsys, "verify", "--l1", "1", "--l3", "3", "--lambda", "1")
        table = {r["key"]: r for r in rows(out)}
        assert float(table["b_heat_hot"]["reference"]) == pytest.approx(2 * math.pi**2 * math.log(9 / 4), rel=1e-11)
        assert table["d_heat_hot_log_free"]["comparator"] != ""


@pytest.mark.parametrize("cmd", [["cycle"], ["diagram", "--samples", "7"], ["verify"], ["sweep", "--l3-list", "5,6"]])
def test_json_and_csv_agree(capsys, cmd):
    base = ["--l1", "1", "--lambda", "0.3"] + ([] if cmd[0] == "sweep" else ["--l3", "5"])
    _, text_csv, _ = run(capsys, *cmd, *base)
    _, text_json, _ = run(capsys, *cmd, *base, "--out", "json")
    data = json.loads(text_json)
    table = rows(text_csv)
    if cmd[0] == "cycle":
        assert {r["key"]: float(r["value"]) for r in table} == data
        return
    assert len(table) == len(data)
    for r, d in zip(table, data):
        for k, v in d.items():
            if isinstance(v, float):
                assert float(r[k]) == v
            else:
                assert r[k] == ("" if v is None else str(v))


def test_deterministic(capsys):
    argv = ["verify", "--l1", "0.3", "--l3", "2.2", "--lambda", "2", "--precision", "17"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize("name, argv", [
    ("cycle_fp", ["cycle", "--l1", "1", "--l3", "4", "--lambda", "0"]),
    ("diagram_fp", ["diagram", "--samples", "2", "--l1", "1", "--l3", "4", "--lambda", "0"]),
    ("verify_fp", ["verify", "--l1", "1", "--l3", "4", "--lambda", "0"]),
    ("cycle_pt", ["cycle", "--l1", "1", "--l3", "3", "--lambda", "1"]),
    ("diagram_pt", ["diagram", "--samples", "2", "--l1", "1", "--l3", "3", "--lambda", "1"]),
    ("verify_pt", ["verify", "--l1", "1", "--l3", "3", "--lambda", "1"]),
])
def test_golden(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / f"{name}.csv").read_text()


def test_black_box_exit_codes():
    def call(*argv):
        return subprocess.run([sys.executable, "-m", "qwell_carnot", *argv], capture_output=True, text=True)

    ok = call("cycle", "--l1", "1", "--l3", "4")
    assert ok.returncode == 0 and ok.stderr == ""
    bad = call("cycle", "--l1", "1", "--l3", "1.5")
    assert bad.returncode == 2 and bad.stdout == ""


def test_numeric_failure_exit_code(capsys, monkeypatch):
    from qwell_carnot import carnot_cycle
    from qwell_carnot.errors import NonConvergenceError

    def boom(*args, **kwargs):
        raise NonConvergenceError("forced", interval=(1.0, 2.0))

    monkeypatch.setattr(carnot_cycle, "work_quadrature", boom)
    code, out, err = run(capsys, "verify", "--l1", "1", "--l3", "4")
    assert code == 3
    assert "numeric failure" in err
