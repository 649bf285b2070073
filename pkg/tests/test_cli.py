import io
import json
import sys

from schwinger_su3 import cli
from schwinger_su3.poly import Polynomial, poly_from_records, poly_to_records


def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim(capsys):
    code, out, _ = _run(capsys, "dim", "1", "1")
    assert code == 0 and out.strip() == "8"


def test_spectrum_csv(capsys):
    code, out, _ = _run(capsys, "spectrum", "1", "0", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("p,q,r,s,I2,Y3,I,Y,size")
    assert len(lines) == 3
    assert "0,-2/3" in lines[1]  # (r,s) = (0,0): I = 0, Y = -2/3
    assert "1/2,1/3" in lines[2]  # (r,s) = (1,0): I = 1/2, Y = 1/3


def test_spectrum_json(capsys):
    code, out, _ = _run(capsys, "spectrum", "1", "1", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 4
    assert sum(r["size"] for r in rows) == 8


def test_cg_text(capsys):
    code, out, _ = _run(capsys, "cg", "1", "1")
    assert code == 0
    assert "(1,1) + (0,0)" in out


def test_mult(capsys):
    code, out, _ = _run(capsys, "mult", "U2", "2", "2")
    assert code == 0 and out.strip() == "1"
    code, out, _ = _run(capsys, "mult", "U2", "2", "1")
    assert code == 0 and out.strip() == "0"


def test_state_text(capsys):
    code, out, _ = _run(
        capsys, "state", "1", "0", "--I", "1/2", "--M=-1/2", "--Y", "1/3",
        "--m", "2",
    )
    assert code == 0
    assert "exps=[0, 1, 0, 0, 0, 0]" in out
    assert "norm_sq = 1" in out


def test_state_json_round_trip(capsys):
    args = ["state", "1", "1", "--I", "0", "--M", "0", "--Y", "0", "--m", "5/2",
            "--json"]
    code, out, _ = _run(capsys, *args)
    assert code == 0
    parsed = json.loads(out)
    assert cli._dump_json(parsed) == out.strip()  # byte-identical re-serialization
    assert parsed["norm_sq"] == {"num": "6", "den": "1"}


def test_state_latex(capsys):
    code, out, _ = _run(
        capsys, "state", "1", "0", "--I", "1/2", "--M", "1/2", "--Y", "1/3",
        "--m", "2", "--latex",
    )
    assert code == 0 and "z_1" in out and "\\sqrt" in out


def test_state_invalid_weight_exits_2(capsys):
    code, _, err = _run(
        capsys, "state", "1", "0", "--I", "1", "--M", "0", "--Y", "0", "--m", "2",
    )
    assert code == 2 and "error" in err


def test_state_bad_fraction_exits_2(capsys):
    code, _, err = _run(
        capsys, "state", "1", "0", "--I", "1/3", "--M", "0", "--Y", "0", "--m", "2",
    )
    assert code == 2 and "error" in err


def _feed_stdin(monkeypatch, poly):
    text = json.dumps(poly_to_records(poly))
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))


def test_project_stdin(capsys, monkeypatch):
    z1w1 = Polynomial.monomial((1, 0, 0, 1, 0, 0))
    _feed_stdin(monkeypatch, z1w1)
    code, out, _ = _run(capsys, "project", "--input", "-")
    assert code == 0
    got = poly_from_records(json.loads(out))
    zw = (
        Polynomial.monomial((1, 0, 0, 1, 0, 0))
        + Polynomial.monomial((0, 1, 0, 0, 1, 0))
        + Polynomial.monomial((0, 0, 1, 0, 0, 1))
    )
    from fractions import Fraction

    assert got == z1w1 - zw.scale(Fraction(1, 3))


def test_map_stdin(capsys, monkeypatch):
    _feed_stdin(monkeypatch, Polynomial.variable(1))
    code, out, _ = _run(capsys, "map", "--input", "-")
    assert code == 0
    parsed = json.loads(out)
    (chan,) = parsed["channels"]
    assert (chan["p"], chan["q"]) == (1, 0)
    assert chan["scale_sq_num"] == "6" and chan["scale_sq_den"] == "1"


def test_map_rejects_traceful_input(capsys, monkeypatch):
    zw = (
        Polynomial.monomial((1, 0, 0, 1, 0, 0))
        + Polynomial.monomial((0, 1, 0, 0, 1, 0))
        + Polynomial.monomial((0, 0, 1, 0, 0, 1))
    )
    _feed_stdin(monkeypatch, zw)
    code, _, err = _run(capsys, "map", "--input", "-")
    assert code == 2 and "error" in err


def test_bad_poly_json_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("not json"))
    code, _, err = _run(capsys, "project", "--input", "-")
    assert code == 2 and "error" in err


def test_table_dims(capsys):
    code, out, _ = _run(capsys, "table", "dims", "--max-p", "2", "--max-q", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10  # header + 9 rows
    assert lines[-1] == "2,2,27,7"


def test_table_mult_u2_diagonal(capsys):
    code, out, _ = _run(
        capsys, "table", "mult", "--subgroup", "U2", "--max-p", "3", "--max-q", "3",
        "--format", "json",
    )
    rows = json.loads(out)
    assert code == 0
    for row in rows:
        assert row["mult"] == (1 if row["p"] == row["q"] else 0)


def test_verify_small(capsys):
    code, out, _ = _run(
        capsys, "verify", "--max-pq", "1", "--degree", "2", "--samples", "2",
    )
    parsed = json.loads(out)
    assert code == 0
    assert parsed["pass"] is True
    names = [s["name"] for s in parsed["suites"]]
    assert names == sorted(names)


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(
        cli.verify_mod, "run_all",
        lambda **kwargs: [{"name": "stub", "passed": False}],
    )
    code, out, _ = _run(capsys, "verify")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_unknown_command_exits_2(capsys):
    assert cli.main(["frobnicate"]) == 2
