import csv
import io

import pytest

from monotree.cli import EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from monotree.io import format_coords, parse_coords


@pytest.fixture
def files(tmp_path):
    def gen(kind, n, seed=0):
        out = tmp_path / f"{kind}{n}_{seed}.txt"
        assert main(["gen", "--kind", kind, "--n", str(n), "--seed", str(seed), "--out", str(out)]) == EXIT_OK
        return out
    return gen


def test_gen(files):
    b = files("binary", 31).read_text().splitlines()
    assert b[0] == "31" and len(b) == 31
    p = files("path", 15).read_text().splitlines()
    assert p[0] == "15" and len(p) == 15
    assert files("random", 100, 7).read_text() == files("random", 100, 7).read_text()


def test_gen_bad_flags(capsys):
    assert main(["gen", "--kind", "binary", "--n", "30"]) == EXIT_INPUT
    assert main(["gen", "--kind", "path", "--n", "0"]) == EXIT_INPUT
    with pytest.raises(SystemExit) as e:
        main(["gen", "--kind", "spiral", "--n", "3"])
    assert e.value.code == 2


def test_draw_path_one_quadrant(files, tmp_path, capsys):
    p = files("path", 15)
    coords = tmp_path / "c.txt"
    assert main(["draw", "--algo", "1q", "--input", str(p), "--root", "0", "--coords", str(coords), "--verify"]) == EXIT_OK
    pts = parse_coords(coords.read_text(), 15)
    assert max(x for x, _ in pts) - min(x for x, _ in pts) + 1 == 15
    assert max(y for _, y in pts) - min(y for _, y in pts) + 1 == 15
    assert "grid: 15x15" in capsys.readouterr().err


def test_draw_needs_root(files):
    assert main(["draw", "--algo", "1q", "--input", str(files("path", 15))]) == EXIT_INPUT


def test_draw_missing_file(tmp_path):
    assert main(["draw", "--algo", "2q", "--input", str(tmp_path / "nope.txt")]) == EXIT_INPUT


def test_draw_root_from_file(tmp_path, capsys):
    f = tmp_path / "t.txt"
    f.write_text("3\nroot 0\n0 1\n1 2\n")
    assert main(["draw", "--algo", "1q", "--input", str(f)]) == EXIT_OK
    assert capsys.readouterr().out == "0 0 0\n1 1 1\n2 2 2\n"


def test_svg_byte_identical(files, tmp_path):
    b = files("binary", 31)
    a1, a2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["draw", "--algo", "4q", "--input", str(b), "--svg", str(a1)]) == EXIT_OK
    assert main(["draw", "--algo", "4q", "--input", str(b), "--svg", str(a2)]) == EXIT_OK
    assert a1.read_bytes() == a2.read_bytes()


def test_verify_command(files, tmp_path):
    p = files("path", 5)
    good = tmp_path / "good.txt"
    assert main(["draw", "--algo", "2q", "--input", str(p), "--coords", str(good)]) == EXIT_OK
    assert main(["verify", "--algo", "2q", "--input", str(p), "--coords", str(good)]) == EXIT_OK
    bad = tmp_path / "bad.txt"
    bad.write_text(format_coords([(0, 0), (2, 0), (1, 0), (3, 5), (4, 5)]))
    assert main(["verify", "--algo", "2q", "--input", str(p), "--coords", str(bad)]) == EXIT_VERIFY
    bad.write_text("0 0 0\n")
    assert main(["verify", "--algo", "2q", "--input", str(p), "--coords", str(bad)]) == EXIT_INPUT


def read_report(path):
    return list(csv.DictReader(io.StringIO(path.read_text())))


def test_enumerate_rooted_one_quadrant(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert main(["enumerate", "--n", "10", "--rooted", "--algo", "1q", "--report", str(out)]) == EXIT_OK
    rows = read_report(out)
    assert len(rows) == 719
    assert all(r["bound_ok"] == "true" for r in rows)
    assert max((int(r["width_pts"]), int(r["height_pts"])) for r in rows) == (10, 10)
    assert "max dims 10x10" in capsys.readouterr().out


def test_enumerate_free_four_quadrant(tmp_path):
    out = tmp_path / "f.csv"
    assert main(["enumerate", "--n", "10", "--free", "--algo", "4q", "--report", str(out)]) == EXIT_OK
    rows = read_report(out)
    assert len(rows) == 106
    assert all(int(r["width_pts"]) <= 9 and int(r["height_pts"]) <= 9 for r in rows)
    assert all(r["embedding_ok"] == "na" for r in rows)


def test_enumerate_single(tmp_path):
    out = tmp_path / "one.csv"
    assert main(["enumerate", "--n", "1", "--algo", "2q", "--report", str(out)]) == EXIT_OK
    (row,) = read_report(out)
    assert (row["width_pts"], row["height_pts"]) == ("1", "1")


def test_enumerate_deterministic_across_threads(tmp_path, monkeypatch):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    monkeypatch.setenv("MTD_THREADS", "1")
    main(["enumerate", "--n", "8", "--algo", "2q", "--report", str(a)])
    monkeypatch.setenv("MTD_THREADS", "4")
    main(["enumerate", "--n", "8", "--algo", "2q", "--report", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_enumerate_bad_n():
    with pytest.raises(SystemExit) as e:
        main(["enumerate", "--n", "20", "--algo", "2q"])
    assert e.value.code == 2
