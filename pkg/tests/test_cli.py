import subprocess
import sys

import pytest

from copsrobber import cli
from copsrobber.graph import read_graph
from copsrobber.interval import read_intervals, validate_representation


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def structured(out):
    return dict(line.split("=", 1) for line in out.splitlines())


@pytest.fixture
def files(tmp_path, capsys):
    paths = {}
    for name, fam, params in [("th3", "theta", [3]), ("th4", "theta", [4]), ("acc4", "chordal-accessible", [4]),
                              ("q3", "hypercube", [3]), ("c5", "cycle", [5]), ("k5", "complete", [5]),
                              ("p5", "path", [5]), ("k3", "complete", [3]), ("sp", "strong-product", [2])]:
        path = tmp_path / f"{name}.g"
        assert cli.main(["gen", fam, *map(str, params), "-o", str(path)]) == 0
        paths[name] = path
    capsys.readouterr()
    return paths


def test_gen_sizes(files, capsys):
    assert read_graph(files["th3"]).n == 21
    assert read_graph(files["acc4"]).n == 25
    assert read_graph(files["q3"]).n == 8
    assert (files["acc4"].parent / "acc4.g.pair").read_text().startswith("X=")
    g, rep = read_graph(files["sp"]), read_intervals(str(files["sp"]) + ".intervals")
    assert validate_representation(g, rep)


def test_gen_summary_and_stdout(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "theta", 3, "-o", tmp_path / "t.g")
    assert code == 0 and out.strip() == "family=theta m=3 n=21 edges=27"
    code, out, _ = run(capsys, "gen", "hypercube", 2)
    assert code == 0 and out.splitlines()[-5:] == ["4 4", "0 1", "0 2", "1 3", "2 3"]


@pytest.mark.parametrize("argv", [["gen", "theta", "2"], ["gen", "nope", "3"], ["gen", "theta"],
                                  ["gen", "random-sparse", "10"], ["gen", "hypercube", "x"],
                                  ["gen", "product", "K2xQ3"], ["gen", "chordal-accessible", "4"]])
def test_gen_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error")


def test_gen_random_sparse_is_reproducible(capsys, tmp_path):
    a, b = tmp_path / "a.g", tmp_path / "b.g"
    assert cli.main(["gen", "random-sparse", "40", "--seed", "5", "-o", str(a)]) == 0
    assert cli.main(["gen", "random-sparse", "40", "--seed", "5", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_solve(files, capsys):
    code, out, _ = run(capsys, "solve", files["c5"])
    assert code == 0 and "c_inf = 2" in out
    code, out, _ = run(capsys, "solve", files["k5"])
    assert code == 0 and "c_inf = 1" in out
    code, out, _ = run(capsys, "solve", files["th4"], "--budget", 1000, "--format", "structured")
    doc = structured(out)
    assert code == 3 and doc["resolved"] == "false" and int(doc["bracket_lo"]) >= 1


def test_solve_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.g"
    bad.write_text("3 2\n0 1\n")
    assert run(capsys, "solve", bad)[0] == 2
    assert run(capsys, "solve", tmp_path / "missing.g")[0] == 2
    assert run(capsys, "solve")[0] == 2


def test_bounds(files, capsys):
    code, out, _ = run(capsys, "bounds", files["q3"], "--format", "structured")
    doc = structured(out)
    assert code == 0 and doc["schema_version"] == "1" and doc["command"] == "bounds"
    assert doc["entry_treewidth_value"] == "4" and doc["entry_domination_value"] == "2"
    assert doc["bracket_hi"] == "2" and doc["exact"] == "2"
    code, out, _ = run(capsys, "bounds", files["sp"], "--intervals", str(files["sp"]) + ".intervals")
    assert code == 0 and "interval-w = 2" in out
    code, out, _ = run(capsys, "bounds", files["k5"])
    assert "bracket = (1, 1)" in out
    code, out, _ = run(capsys, "bounds", files["q3"], "--product", "K2xK2xK2", "--format", "structured")
    assert structured(out)["entry_product-lift_value"] == "4"


def test_approx(files, capsys):
    code, out, _ = run(capsys, "approx", files["sp"], "--intervals", str(files["sp"]) + ".intervals",
                       "--format", "structured")
    doc = structured(out)
    assert code == 0 and doc["w"] == "2" and doc["upper"] == "6"


def test_play_examples(files, capsys):
    code, out, _ = run(capsys, "play", files["th3"], "--cops", "optimal", "--robber", "theta-evader", "--k", 2,
                       "--rounds", 100)
    assert code == 0 and out.splitlines()[-1] == "outcome: Survived(100)"
    code, out, _ = run(capsys, "play", files["p5"], "--cops", "sweep", "--robber", "optimal", "--k", 2)
    assert code == 0 and out.splitlines()[-1].startswith("outcome: Capture(")
    code, out, _ = run(capsys, "play", files["k3"], "--cops", "domination", "--robber", "optimal", "--k", 1)
    assert out.splitlines()[-1] == "outcome: Capture(1)"


def test_play_policies_needing_side_inputs(files, capsys):
    sp = files["sp"]
    code, out, _ = run(capsys, "play", sp, "--cops", "three-team", "--robber", "farthest", "--k", 6,
                       "--intervals", str(sp) + ".intervals")
    assert code == 0 and "Capture" in out.splitlines()[-1]
    assert run(capsys, "play", sp, "--cops", "three-team", "--robber", "farthest", "--k", 6)[0] == 2
    code, out, _ = run(capsys, "play", files["q3"], "--cops", "product-lift", "--robber", "optimal", "--k", 4,
                       "--product", "K2xK2xK2")
    assert "Capture" in out.splitlines()[-1]
    code, out, _ = run(capsys, "play", files["acc4"], "--cops", "greedy", "--robber", "accessible-evader",
                       "--k", 3, "--rounds", 50)
    assert out.splitlines()[-1] == "outcome: Survived(50)"
    code, out, _ = run(capsys, "play", files["q3"], "--cops", "random", "--robber", "wide-evader", "--k", 1,
                       "--seed", 2, "--rounds", 30)
    assert out.splitlines()[-1] == "outcome: Survived(30)"
    assert run(capsys, "play", files["q3"], "--cops", "greedy", "--robber", "theta-evader", "--k", 1)[0] == 2


def test_play_transcript_file(files, capsys, tmp_path):
    path = tmp_path / "t.txt"
    code, out, _ = run(capsys, "play", files["k3"], "--cops", "domination", "--robber", "optimal", "--k", 1,
                       "--transcript", path)
    assert code == 0 and path.read_text().splitlines()[-1] == "outcome: Capture(1)"


def test_illegal_policy_exits_4(files, capsys, monkeypatch):
    class Cheater:
        name = "cheater"

        def place(self, g, k):
            return (0,)

        def move(self, g, cops, robber):
            return (robber,)

    monkeypatch.setattr(cli, "build_cop_policy", lambda name, g, args: Cheater())
    code, _, err = run(capsys, "play", files["p5"], "--cops", "greedy", "--robber", "farthest", "--k", 1)
    assert code == 4 and "cheater" in err


@pytest.mark.parametrize("argv", [["play", "X", "--cops", "bogus", "--robber", "optimal", "--k", "1"],
                                  ["play", "X", "--cops", "greedy", "--robber", "bogus", "--k", "1"],
                                  ["play", "X", "--cops", "greedy", "--robber", "optimal", "--k", "0"]])
def test_play_usage_errors(files, capsys, argv):
    argv = [str(files["p5"]) if a == "X" else a for a in argv]
    assert run(capsys, *argv)[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "chordal")
    assert code == 0 and out.splitlines()[-1] == "4/4 checks passed"
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_structured_output_is_deterministic(files, capsys):
    outs = [run(capsys, "bounds", files["q3"], "--format", "structured")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "play", files["q3"], "--cops", "random", "--robber", "random", "--k", 1, "--seed", 3,
                "--rounds", 20, "--format", "structured")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_no_partial_output_on_error(files, capsys, tmp_path):
    out = tmp_path / "report.txt"
    assert run(capsys, "bounds", files["q3"], "--product", "K3xK3", "--output", out)[0] == 2
    assert not out.exists()
    assert run(capsys, "bounds", files["q3"], "--output", out)[0] == 0
    assert out.read_text().startswith("lower")
    assert [p.name for p in tmp_path.iterdir() if p.name.startswith(".tmp")] == []


def test_bad_budget(files, capsys):
    assert run(capsys, "solve", files["c5"], "--budget", "0")[0] == 2


def test_console_entry_point(files):
    res = subprocess.run([sys.executable, "-m", "copsrobber.cli", "solve", str(files["k5"])],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "c_inf = 1" in res.stdout
