import json
import math
import os
from pathlib import Path

import pytest

from pareto_kcenter.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def stair4(tmp_path):
    path = tmp_path / "stair4.txt"
    path.write_text("0 3\n1 2\n2 1\n3 0\n")
    return str(path)


class TestSkylineCommand:
    def test_trivial_file(self, capsys, tmp_path):
        path = tmp_path / "two.txt"
        path.write_text("0 0\n1 1\n")
        code, out, _ = run_cli(capsys, "skyline", str(path))
        assert code == 0
        assert out == "1\n1 1\n"

    def test_bounded_too_small_exits_3(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "skyline", stair4, "--algo", "bounded:1")
        assert code == 3
        assert "incomplete" in out

    def test_bounded_large_enough(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "skyline", stair4, "--algo", "bounded:4")
        assert code == 0
        assert out.splitlines()[0] == "4"

    def test_optimal_equals_brute(self, capsys, tmp_path):
        code, gen_out, _ = run_cli(capsys, "gen", "--generator", "clustered",
                                   "--n", "300", "--seed", "11")
        path = tmp_path / "inst.txt"
        path.write_text(gen_out)
        _, opt_out, _ = run_cli(capsys, "skyline", str(path), "--algo", "optimal")
        _, brute_out, _ = run_cli(capsys, "skyline", str(path), "--algo", "brute")
        assert opt_out == brute_out

    def test_parse_error_reports_line(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 0\noops\n")
        code, _, err = run_cli(capsys, "skyline", str(path))
        assert code == 2
        assert "line 2" in err

    def test_empty_file_exits_2(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing here\n\n")
        code, _, _ = run_cli(capsys, "skyline", str(path))
        assert code == 2


class TestDecideCommand:
    def test_feasible(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "decide", stair4,
                               "--k", "2", "--lam", "1.4143")
        assert code == 0
        assert out.splitlines()[0] == "FEASIBLE"

    def test_infeasible(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "decide", stair4,
                               "--k", "2", "--lam", "1.4")
        assert code == 1
        assert out.strip() == "INCOMPLETE"

    def test_grouped_matches_materialized(self, capsys, stair4):
        for lam in ("0.5", "1.4143", "2.9"):
            _, a, _ = run_cli(capsys, "decide", stair4, "--k", "2", "--lam", lam)
            _, b, _ = run_cli(capsys, "decide", stair4, "--k", "2", "--lam", lam,
                              "--grouped")
            assert a == b

    def test_zero_lambda_k_equals_n(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "decide", stair4, "--k", "4", "--lam", "0")
        assert code == 0
        assert out.splitlines()[0] == "FEASIBLE"


class TestSolveCommand:
    def test_lambda_printed_to_12_decimals(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "solve", stair4, "--k", "2",
                               "--method", "matrix")
        assert code == 0
        assert "lambda_star=1.414213562373\n" in out

    def test_methods_agree_for_k1(self, capsys, stair4):
        values = set()
        for method in ("matrix", "parametric", "auto", "one-center"):
            _, out, _ = run_cli(capsys, "solve", stair4, "--k", "1",
                                "--method", method)
            record = dict(line.split("=", 1) for line in out.splitlines())
            values.add(record["lambda_star_sq"])
        assert len(values) == 1

    def test_k_at_least_h_gives_zero(self, capsys, stair4):
        _, out, _ = run_cli(capsys, "solve", stair4, "--k", "7")
        assert "lambda_star=0.000000000000\n" in out

    def test_json_record(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "solve", stair4, "--k", "2", "--json")
        record = json.loads(out)
        assert record["k"] == 2 and record["h"] == 4
        assert math.isclose(record["lambda_star"], math.sqrt(2))
        assert len(record["centers"]) == 2

    def test_approx_requires_epsilon(self, capsys, stair4):
        code, _, err = run_cli(capsys, "solve", stair4, "--k", "2",
                               "--method", "approx")
        assert code == 2
        assert "epsilon" in err

    def test_approx_runs(self, capsys, stair4):
        code, out, _ = run_cli(capsys, "solve", stair4, "--k", "2",
                               "--method", "approx:0.5")
        assert code == 0


class TestGenCommand:
    def test_round_trip_bit_exact(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "gen", "--n", "120", "--seed", "3")
        path = tmp_path / "inst.txt"
        path.write_text(out)
        _, out2, _ = run_cli(capsys, "gen", "--n", "120", "--seed", "3",
                             "--out", str(tmp_path / "direct.txt"))
        assert (tmp_path / "direct.txt").read_text() == out
        from pareto_kcenter.pointio import read_point_file
        from pareto_kcenter.instances import InstanceSpec, generate
        P = read_point_file(str(path))
        assert P.points == generate(InstanceSpec("uniform-square", 120, 3)).points

    def test_env_seed_override(self, capsys, monkeypatch):
        monkeypatch.setenv("PARETO_KCENTER_SEED", "123")
        _, a, _ = run_cli(capsys, "gen", "--n", "10")
        monkeypatch.delenv("PARETO_KCENTER_SEED")
        _, b, _ = run_cli(capsys, "gen", "--n", "10", "--seed", "123")
        assert a == b

    def test_rejects_bad_n(self, capsys):
        code, _, _ = run_cli(capsys, "gen", "--n", "0")
        assert code == 2

    def test_rejects_bad_param(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--n", "5",
                               "--param", "scale=abc")
        assert code == 2 and "KEY=NUMBER" in err

    def test_rejects_bad_env_seed(self, capsys, monkeypatch):
        monkeypatch.setenv("PARETO_KCENTER_SEED", "not-a-number")
        code, _, err = run_cli(capsys, "gen", "--n", "5")
        assert code == 2 and "PARETO_KCENTER_SEED" in err


class TestBenchCommand:
    def test_table_shape_and_ratio(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--generator", "staircase",
                               "--n", "256,512", "--k", "2",
                               "--method", "skyline-optimal", "--seed", "5")
        assert code == 0
        lines = out.strip().splitlines()
        header = lines[0].split("\t")
        assert header[:5] == ["gen", "n", "h", "k", "method"]
        assert "t_ratio" in header and "c_ratio" in header
        row512 = lines[2].split("\t")
        assert row512[1] == "512"
        assert row512[header.index("c_ratio")] != ""

    def test_rejects_zero_n(self, capsys):
        code, _, _ = run_cli(capsys, "bench", "--n", "0,128")
        assert code == 2

    def test_rejects_non_integer_lists(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--n", "12,abc")
        assert code == 2 and "comma-separated integers" in err

    def test_decide_grouped_method(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--generator", "staircase",
                               "--n", "128", "--k", "4",
                               "--method", "decide-grouped", "--seed", "5")
        assert code == 0
        assert "decide-grouped" in out

    def test_digest_stable_across_runs(self, capsys):
        def digests():
            _, out, _ = run_cli(capsys, "bench", "--generator", "clustered",
                                "--n", "64,128", "--k", "3",
                                "--method", "matrix", "--seed", "9")
            lines = out.strip().splitlines()
            col = lines[0].split("\t").index("digest")
            return [line.split("\t")[col] for line in lines[1:]]

        assert digests() == digests()


class TestPlotCommand:
    def test_structure_one_disk_per_center(self, capsys, stair4, tmp_path):
        out_path = tmp_path / "plot.svg"
        code, _, _ = run_cli(capsys, "plot", stair4, "--k", "2",
                             "--out", str(out_path))
        assert code == 0
        doc = out_path.read_text()
        assert doc.startswith("<?xml")
        assert doc.count('class="disk"') == 2

    def test_k_equals_h_zero_radius_disks(self, capsys, stair4, tmp_path):
        out_path = tmp_path / "plot.svg"
        run_cli(capsys, "plot", stair4, "--k", "4", "--out", str(out_path))
        doc = out_path.read_text()
        assert doc.count('class="disk"') == 4
        assert 'r="0.000000"' in doc

    def test_deterministic_bytes(self, capsys, stair4, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run_cli(capsys, "plot", stair4, "--k", "2", "--out", str(a))
        run_cli(capsys, "plot", stair4, "--k", "2", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestGoldenSnapshots:
    def test_solve_output_byte_stable(self, capsys):
        code, out, _ = run_cli(capsys, "solve", str(GOLDEN / "staircase4.txt"),
                               "--k", "2", "--method", "matrix")
        assert code == 0
        assert out == (GOLDEN / "staircase4_solve.txt").read_text()

    def test_svg_byte_stable(self, capsys, tmp_path):
        out_path = tmp_path / "golden_check.svg"
        run_cli(capsys, "plot", str(GOLDEN / "staircase4.txt"), "--k", "2",
                "--method", "matrix", "--out", str(out_path))
        assert out_path.read_bytes() == (GOLDEN / "staircase4.svg").read_bytes()
