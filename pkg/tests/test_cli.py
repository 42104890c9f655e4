import subprocess
import sys
from pathlib import Path

import pytest

from scclevel.cli import EXIT_IO, EXIT_PARSE, EXIT_SPEC, main, run_solve_command
from scclevel.textio import parse_edge_list

DATA = Path(__file__).parent / "data"


def solve_text(tmp_path, text):
    src = tmp_path / "in.txt"
    dst = tmp_path / "out.txt"
    src.write_text(text)
    status = run_solve_command(str(src), str(dst))
    return status, dst


def test_single_vertex(tmp_path):
    status, dst = solve_text(tmp_path, "1 0\n")
    assert status == 0
    assert dst.read_bytes() == b"1\n1 \n"


def test_example_file(tmp_path):
    dst = tmp_path / "out.txt"
    assert main(["solve", str(DATA / "example4.txt"), str(dst)]) == 0
    assert dst.read_bytes() == (DATA / "example4.expected").read_bytes()


def test_parse_error_reported(tmp_path, capsys):
    status, dst = solve_text(tmp_path, "2 2\n1 2\n")
    assert status == EXIT_PARSE
    assert "EdgeCountMismatch" in capsys.readouterr().err
    assert not dst.exists()


def test_missing_input(tmp_path, capsys):
    assert run_solve_command(str(tmp_path / "nope"), str(tmp_path / "out")) == EXIT_IO
    assert "IOError" in capsys.readouterr().err


def test_gen_writes_edge_list(tmp_path):
    out = tmp_path / "g.txt"
    assert main(["gen", "random", "20", "50", "--seed", "3", "-o", str(out)]) == 0
    g = parse_edge_list(out.read_text())
    assert (g.vertex_count, g.edge_count) == (20, 50)
    again = tmp_path / "g2.txt"
    main(["gen", "random", "20", "50", "--seed", "3", "-o", str(again)])
    assert out.read_bytes() == again.read_bytes()


def test_gen_then_solve(tmp_path):
    g = tmp_path / "g.txt"
    out = tmp_path / "out.txt"
    main(["gen", "cycle_chain", "12", "3", "-o", str(g)])
    assert main(["solve", str(g), str(out)]) == 0
    assert out.read_text() == "3\n1 2 3 4 \n5 6 7 8 \n9 10 11 12 \n"


def test_bench_lines(capsys):
    assert main(["bench", "cycle", "10", "--seed", "7", "--reps", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    kind, n, m, seed, wall, links, unions, checks, pushes = lines[0].split("\t")
    assert (kind, n, m, seed, unions, checks, pushes) == ("cycle", "10", "10", "7", "9", "10", "10")
    assert lines[1].split("\t")[3] == "8"
    assert int(wall) >= 0 and int(links) >= 0


@pytest.mark.parametrize("argv", [["gen", "cycle_chain", "10", "3"], ["bench", "cycle", "1", "2"]])
def test_invalid_spec(argv, capsys):
    assert main(argv) == EXIT_SPEC
    assert "InvalidSpec" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    out = tmp_path / "out.txt"
    proc = subprocess.run(
        [sys.executable, "-m", "scclevel", "solve", str(DATA / "example4.txt"), str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.read_text() == "2\n1 2 3 \n4 \n"
