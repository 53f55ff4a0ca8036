import subprocess
import sys

import pytest

from lfec import genio
from lfec.cli import main
from lfec.facial import verify


@pytest.fixture
def c5(tmp_path):
    p = tmp_path / "c5.pg"
    genio.write_pg(genio.cycle(5), p)
    return p


def test_gen(capsys):
    assert main(["gen", "--family", "cycle", "--n", "5"]) == 0
    assert capsys.readouterr().out == genio.serialize(genio.cycle(5))


def test_gen_to_file(tmp_path):
    out = tmp_path / "t.pg"
    assert main(["gen", "--family", "tight_family", "--l", "2", "-o", str(out)]) == 0
    assert genio.serialize(genio.read_pg(out)) == genio.serialize(genio.tight_family(2))


def test_solve_golden(tmp_path, capsys):
    g = tmp_path / "t.pg"
    col = tmp_path / "t.col"
    genio.write_pg(genio.tight_family(2), g)
    assert main(["solve", str(g), "--l", "2", "--max-colors", "9", "-o", str(col)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "chi=7" and out[1].startswith("nodes=")
    assert verify(genio.read_pg(g), 2, genio.read_col(col)) == []


def test_solve_above_kmax(c5, capsys):
    assert main(["solve", str(c5), "--max-colors", "4"]) == 1
    assert capsys.readouterr().out.splitlines()[0] == "chi>4"


def test_verify_exit_codes(c5, tmp_path, capsys):
    good = tmp_path / "good.col"
    bad = tmp_path / "bad.col"
    good.write_text("k 5\n" + "".join(f"c {e} {e + 1}\n" for e in range(5)))
    bad.write_text("k 5\n" + "".join(f"c {e} 1\n" for e in range(5)))
    assert main(["verify", str(c5), str(good)]) == 0
    assert capsys.readouterr().out == "valid\n"
    assert main(["verify", str(c5), str(bad)]) == 1
    assert capsys.readouterr().out.splitlines()[-1] == "invalid: 20 conflicts"  # 10 pairs, each on both faces
    partial = tmp_path / "partial.col"
    partial.write_text("c 0 1\n")
    assert main(["verify", str(c5), str(partial)]) == 1


def test_construct(tmp_path, capsys):
    g = tmp_path / "d.pg"
    col = tmp_path / "d.col"
    trace = tmp_path / "d.trace"
    genio.write_pg(genio.dodecahedron(), g)
    assert main(["construct", str(g), "-o", str(col), "--trace", str(trace)]) == 0
    assert verify(genio.dodecahedron(), 2, genio.read_col(col)) == []
    assert trace.read_text().startswith("step 1 kind=FiveFiveLowDegree")
    assert "detect_gaps=0" in capsys.readouterr().err


def test_audit_golden(c5, capsys):
    assert main(["audit", str(c5)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[:4] == ["initial_total -28", "total -28", "transfers 0", "detect AdjacentTwoVertices"]
    assert sum(line.startswith("negative ") for line in out) == 7


def test_medial(c5, capsys):
    assert main(["medial", str(c5)]) == 0
    M = genio.parse(capsys.readouterr().out)
    assert (M.n_vertices, M.n_edges) == (5, 10)


@pytest.mark.parametrize(
    "argv",
    [[], ["gen"], ["gen", "--family", "petersen"], ["solve"], ["nope"], ["solve", "x.pg", "--l", "two"]],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_missing_file_exit_2(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "missing.pg")]) == 2
    assert "error" in capsys.readouterr().err


def test_parse_error_exit_2(tmp_path, capsys):
    g = tmp_path / "bad.pg"
    g.write_text("pg 1 0\nq\n")
    assert main(["audit", str(g)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_module_entry_point(c5):
    res = subprocess.run([sys.executable, "-m", "lfec.cli", "audit", str(c5)], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("initial_total -28")
