from __future__ import annotations

import json
from fractions import Fraction

import pytest

from starlattice import SchemaError
from starlattice.cli import run
from starlattice.fourier import ConstNonlinearOde
from starlattice.galois import ConstLinearEq
from starlattice.odes import LinearOde, NonlinearOde
from starlattice.specio import as_const_nonlinear, parse_solution, parse_spec, to_document

GAUSSIAN_DOC = {"type": "linear", "order": 1, "coeffs": [[[1, "1"]], [[0, "1"]]], "c0": []}
HARMONIC_DOC = {
    "type": "linear",
    "order": 2,
    "coeffs": [[[0, "1"]], [], [[0, "1"]]],
    "c0": [],
}
SQUARE_DOC = {"type": "nonlinear", "m": 1, "coeffs": [[], [], [[0, "1"]]]}
CONST_DOC = {"type": "const_linear", "coeffs": ["1", "0"]}


def write_doc(tmp_path, doc, name="eq.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_parse_spec_gaussian():
    eq = parse_spec(GAUSSIAN_DOC)
    assert isinstance(eq, LinearOde)
    assert eq.order == 1
    assert eq.coeffs[0].monomials == ((1, Fraction(1)),)
    assert eq.coeffs[1].monomials == ((0, Fraction(1)),)
    assert eq.c0.is_zero


def test_parse_spec_square_equation():
    eq = parse_spec(SQUARE_DOC)
    assert isinstance(eq, NonlinearOde)
    assert eq.m == 1 and eq.degree == 2
    const = as_const_nonlinear(eq)
    assert isinstance(const, ConstNonlinearOde)
    assert const.a == (Fraction(0), Fraction(1))


def test_parse_spec_const_linear():
    eq = parse_spec(CONST_DOC)
    assert isinstance(eq, ConstLinearEq)
    assert eq.order == 2


def test_parse_spec_rejects_empty_leading():
    bad = {"type": "linear", "order": 1, "coeffs": [[[0, "1"]], []], "c0": []}
    with pytest.raises(SchemaError) as err:
        parse_spec(bad)
    assert "coeffs[1]" in str(err.value)


def test_parse_spec_rejects_bad_rational():
    bad = {"type": "const_linear", "coeffs": ["1", "2.5"]}
    with pytest.raises(SchemaError) as err:
        parse_spec(bad)
    assert "coeffs[1]" in str(err.value)


def test_parse_spec_rejects_unknown_field():
    bad = dict(CONST_DOC, extra=1)
    with pytest.raises(SchemaError):
        parse_spec(bad)


def test_round_trip_identity():
    for doc in (GAUSSIAN_DOC, HARMONIC_DOC, SQUARE_DOC, CONST_DOC):
        eq = parse_spec(doc)
        again = parse_spec(to_document(eq))
        assert again == eq
        assert to_document(again) == to_document(eq)


def test_parse_solution_block():
    doc = dict(GAUSSIAN_DOC, solution={"taylor": ["1", "0", "-1/2"]})
    kind, values = parse_solution(doc)
    assert kind == "taylor"
    assert values == (1, 0, Fraction(-1, 2))
    assert parse_solution(GAUSSIAN_DOC) is None


def test_cli_solve_harmonic(tmp_path, capsys):
    path = write_doc(tmp_path, HARMONIC_DOC)
    code = run(["solve", "--input", path, "--init", "0,1", "--length", "10"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,z"
    zs = [line.split(",")[1] for line in lines[1:]]
    assert zs[:6] == ["0", "1", "2", "2", "0", "-4"]


def test_cli_solve_missing_init(tmp_path, capsys):
    path = write_doc(tmp_path, HARMONIC_DOC)
    code = run(["solve", "--input", path, "--length", "6"])
    assert code == 2


def test_cli_residual_pass_and_fail(tmp_path, capsys):
    # exact solution: exp(-t^2/2) for z' + t z = 0 needs all coefficients;
    # use the square equation with the all-ones series instead.
    doc = dict(SQUARE_DOC, solution={"taylor": ["1"] * 20})
    path = write_doc(tmp_path, doc)
    assert run(["residual", "--input", path, "--length", "12"]) == 0
    capsys.readouterr()
    bad = dict(SQUARE_DOC, solution={"taylor": ["1", "2", "1"]})
    path = write_doc(tmp_path, bad, "bad.json")
    assert run(["residual", "--input", path, "--length", "2"]) == 1


def test_cli_fourier_square(tmp_path, capsys):
    path = write_doc(tmp_path, SQUARE_DOC)
    code = run(["fourier", "--input", path, "--init", "1", "--length", "8"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,zeta"
    assert all(line.split(",")[1] == "1" for line in lines[1:])


def test_cli_galois_json(tmp_path):
    path = write_doc(tmp_path, CONST_DOC)
    out_path = tmp_path / "galois.json"
    code = run(["galois", "--input", path, "--length", "12", "--out", str(out_path)])
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["ok"] is True
    assert payload["order"] == 2
    assert len(payload["solutions"]) == 2
    assert payload["wronskian"] != "0"


def test_cli_galois_rejects_csv(tmp_path, capsys):
    path = write_doc(tmp_path, CONST_DOC)
    assert run(["galois", "--input", path, "--format", "csv"]) == 2


def test_cli_discretize_harmonic(tmp_path):
    path = write_doc(tmp_path, HARMONIC_DOC)
    out_path = tmp_path / "d.json"
    assert run(["discretize", "--input", path, "--out", str(out_path)]) == 0
    payload = json.loads(out_path.read_text())
    assert payload["local_stencil"] == ["1", "-2", "2"]
    assert payload["nonlocal"] is False
    assert parse_spec(payload["equation"]) == parse_spec(HARMONIC_DOC)


def test_cli_discretize_gaussian_nonlocal(tmp_path):
    path = write_doc(tmp_path, GAUSSIAN_DOC)
    out_path = tmp_path / "d.json"
    assert run(["discretize", "--input", path, "--out", str(out_path)]) == 0
    payload = json.loads(out_path.read_text())
    assert payload["local_stencil"] is None
    assert payload["nonlocal"] is True


def test_cli_corpus_runs_and_passes(tmp_path):
    out_path = tmp_path / "report.json"
    assert run(["corpus", "--length", "8", "--out", str(out_path)]) == 0
    payload = json.loads(out_path.read_text())
    assert payload["all_pass"] is True


def test_cli_determinism(tmp_path):
    path = write_doc(tmp_path, HARMONIC_DOC)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(["solve", "--input", path, "--init", "0,1", "--length", "12", "--out", str(a)])
    run(["solve", "--input", path, "--init", "0,1", "--length", "12", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
    ra, rb = tmp_path / "ra.json", tmp_path / "rb.json"
    run(["corpus", "--length", "6", "--out", str(ra)])
    run(["corpus", "--length", "6", "--out", str(rb)])
    assert ra.read_bytes() == rb.read_bytes()


def test_cli_float_mode_rendering(tmp_path, capsys):
    path = write_doc(tmp_path, HARMONIC_DOC)
    code = run(["solve", "--input", path, "--init", "0,1", "--length", "4", "--mode", "float"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip().splitlines()[1] == "0,0"


def test_cli_usage_error_on_bad_file(tmp_path, capsys):
    assert run(["solve", "--input", str(tmp_path / "missing.json"), "--init", "1"]) == 2


def test_cli_galois_float_root_gate(tmp_path, capsys):
    # x^3 - x - 1 has no rational or quadratic-surd roots
    doc = {"type": "const_linear", "coeffs": ["-1", "-1", "0"]}
    path = write_doc(tmp_path, doc)
    assert run(["galois", "--input", path, "--length", "10"]) == 2
    capsys.readouterr()
    assert run(["galois", "--input", path, "--length", "10", "--allow-float-roots"]) == 0
    capsys.readouterr()
    assert run(["galois", "--input", path, "--length", "10", "--mode", "float"]) == 0


def test_cli_bench_small(tmp_path):
    out_path = tmp_path / "bench.csv"
    code = run(
        ["bench", "--length", "32", "--arity", "2", "--kernel-cap", "32", "--out", str(out_path)]
    )
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0].startswith("length,arity,convolution_seconds")
    assert len(lines) == 2
