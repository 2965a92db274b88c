"""Batch command-line front end.

Subcommands: discretize, residual, solve, fourier, galois, corpus, bench.
Data outputs are byte-deterministic (sorted-key JSON / newline-terminated
CSV, no timestamps); bench emits measured timings and is the documented
exception. Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .corpus import run_corpus
from .errors import RationalParseError, SchemaError, StarLatticeError
from .floatmode import bench_star_power
from .fourier import fourier_step
from .galois import ConstLinearEq, QuadExt, build_fundamental_system, verify_fundamental
from .odes import (
    LinearOde,
    NonlinearOde,
    PolyCoeff,
    lin_residuals,
    lin_step,
    local_stencil,
    nonlin_residuals,
    nonlin_step,
)
from .rational import format_float, format_rational, parse_rational
from .sequences import LatticeSeq, TaylorCoeffs
from .specio import as_const_nonlinear, parse_solution, parse_spec, to_document
from .transforms import taylor_to_lattice

JSON_ONLY = ("discretize", "galois", "corpus")


def _render(value, mode: str):
    if value is None:
        return None
    if isinstance(value, Fraction):
        return format_float(float(value)) if mode == "float" else format_rational(value)
    if isinstance(value, QuadExt):
        if mode == "float":
            c = complex(value)
            return [format_float(c.real), format_float(c.imag)]
        return str(value)
    if isinstance(value, complex):
        return [format_float(value.real), format_float(value.imag)]
    if isinstance(value, float):
        return format_float(value)
    return value


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _load_document(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _parse_init(text: str | None, count: int, what: str) -> tuple[Fraction, ...]:
    if text is None:
        raise SchemaError("--init", f"{what} requires --init with {count} comma-separated rationals")
    values = tuple(parse_rational(part) for part in text.split(","))
    if len(values) != count:
        raise SchemaError("--init", f"expected {count} values, got {len(values)}")
    return values


def _series_table(name: str, values, args) -> str:
    if args.format == "csv":
        return _csv_text(["n", name], [[n, _render(v, args.mode)] for n, v in enumerate(values)])
    return _json_text(
        {"command": args.command, name: [_render(v, args.mode) for v in values]}
    )


def cmd_discretize(args) -> int:
    eq = parse_spec(_load_document(args.input))
    if isinstance(eq, ConstLinearEq):
        monic = LinearOde(tuple(PolyCoeff.constant(c) for c in (*eq.a, Fraction(1))))
        payload = {
            "command": "discretize",
            "equation": to_document(eq),
            "kind": "const_linear",
            "order": eq.order,
            "local_stencil": [format_rational(c) for c in local_stencil(monic)],
            "nonlocal": False,
        }
    elif isinstance(eq, LinearOde):
        stencil = local_stencil(eq)
        payload = {
            "command": "discretize",
            "equation": to_document(eq),
            "kind": "linear",
            "order": eq.order,
            "local_stencil": None if stencil is None else [format_rational(c) for c in stencil],
            "nonlocal": stencil is None,
        }
    else:
        assert isinstance(eq, NonlinearOde)
        constant = all(p == 0 for poly in eq.coeffs for p, _ in poly.monomials)
        payload = {
            "command": "discretize",
            "equation": to_document(eq),
            "kind": "nonlinear",
            "m": eq.m,
            "degree": eq.degree,
            "local_stencil": None,
            "nonlocal": eq.degree >= 2 or not constant,
        }
    _emit(_json_text(payload), args.out)
    return 0


def cmd_residual(args) -> int:
    document = _load_document(args.input)
    eq = parse_spec(document)
    solution = parse_solution(document)
    if solution is None:
        raise SchemaError("solution", "residual verification needs a solution block")
    if isinstance(eq, ConstLinearEq):
        raise SchemaError("type", "residual works on linear/nonlinear documents")
    kind, values = solution
    order = eq.order if isinstance(eq, LinearOde) else eq.m
    if kind == "taylor":
        z = taylor_to_lattice(TaylorCoeffs(values), args.length + order)
    else:
        z = LatticeSeq(values)
    residuals = lin_residuals(eq, z) if isinstance(eq, LinearOde) else nonlin_residuals(eq, z)
    residuals = residuals[: args.length + 1]
    text = _series_table("residual", residuals, args)
    _emit(text, args.out)
    return 0 if all(r == 0 for r in residuals) else 1


def cmd_solve(args) -> int:
    eq = parse_spec(_load_document(args.input))
    if isinstance(eq, ConstLinearEq):
        raise SchemaError("type", "solve works on linear/nonlinear documents")
    if isinstance(eq, LinearOde):
        init = _parse_init(args.init, eq.order, "a linear equation")
        z = lin_step(eq, init, args.length)
    else:
        init = _parse_init(args.init, eq.m, "a nonlinear equation")
        z = nonlin_step(eq, init, args.length)
    _emit(_series_table("z", z.values, args), args.out)
    return 0


def cmd_fourier(args) -> int:
    eq = parse_spec(_load_document(args.input))
    if not isinstance(eq, NonlinearOde):
        raise SchemaError("type", "fourier works on constant-coefficient nonlinear documents")
    const_eq = as_const_nonlinear(eq)
    init = _parse_init(args.init, const_eq.m, "the coefficient recurrence")
    zeta = fourier_step(const_eq, init, args.length)
    _emit(_series_table("zeta", zeta.coeffs, args), args.out)
    return 0


def cmd_galois(args) -> int:
    eq = parse_spec(_load_document(args.input))
    if not isinstance(eq, ConstLinearEq):
        raise SchemaError("type", "galois works on const_linear documents")
    report = verify_fundamental(eq, args.length)
    if args.mode == "exact" and not report.all_exact and not args.allow_float_roots:
        raise SchemaError(
            "--mode",
            "equation has non-exact roots; rerun with --mode float or --allow-float-roots",
        )
    system = build_fundamental_system(eq, args.length)
    payload = {
        "command": "galois",
        "equation": to_document(eq),
        "order": report.order,
        "dimension": report.dimension,
        "roots": [
            {
                "value": _render(r.value, args.mode),
                "multiplicity": r.multiplicity,
                "exact": r.exact,
            }
            for r in report.roots
        ],
        "solutions": [[_render(v, args.mode) for v in sol] for sol in system.solutions],
        "wronskian": _render(report.wronskian, args.mode),
        "wronskian_nonzero": report.wronskian_nonzero,
        "residuals_ok": report.residuals_ok,
        "ok": report.ok,
    }
    _emit(_json_text(payload), args.out)
    return 0 if report.ok else 1


def cmd_corpus(args) -> int:
    report = run_corpus(length=args.length)
    payload = {"command": "corpus", **report}
    _emit(_json_text(payload), args.out)
    return 0 if report["all_pass"] else 1


def cmd_bench(args) -> int:
    sizes = sorted({s for s in (64, 256) if s < args.length} | {args.length})
    rows = bench_star_power(p=args.arity, sizes=tuple(sizes), kernel_cap=args.kernel_cap)
    if args.format == "csv":
        text = _csv_text(
            ["length", "arity", "convolution_seconds", "kernel_seconds", "kernel_slower"],
            [
                [
                    r["length"],
                    r["arity"],
                    format_float(r["convolution_seconds"]),
                    "" if r["kernel_seconds"] is None else format_float(r["kernel_seconds"]),
                    "" if r["kernel_slower"] is None else r["kernel_slower"],
                ]
                for r in rows
            ],
        )
    else:
        text = _json_text({"command": "bench", "rows": rows})
    _emit(text, args.out)
    return 0


_HANDLERS = {
    "discretize": cmd_discretize,
    "residual": cmd_residual,
    "solve": cmd_solve,
    "fourier": cmd_fourier,
    "galois": cmd_galois,
    "corpus": cmd_corpus,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starlattice",
        description="Exact nonlocal discrete analogs of ODEs: build, step, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input: bool) -> None:
        if needs_input:
            p.add_argument("--input", required=True, help="equation document (JSON)")
        p.add_argument("--length", type=int, default=20, help="largest lattice index L")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--mode", choices=("exact", "float"), default="exact")
        p.add_argument("--out", help="output path (stdout when omitted)")

    for name in ("discretize", "residual", "solve", "fourier", "galois"):
        p = sub.add_parser(name)
        add_common(p, needs_input=True)
        if name in ("solve", "fourier"):
            p.add_argument("--init", help="comma-separated initial values, e.g. \"0,1\"")
        if name == "galois":
            p.add_argument("--allow-float-roots", action="store_true")
        if name in JSON_ONLY:
            p.set_defaults(format="json")

    p = sub.add_parser("corpus")
    add_common(p, needs_input=False)
    p.set_defaults(format="json")

    p = sub.add_parser("bench")
    add_common(p, needs_input=False)
    p.add_argument("--arity", type=int, default=3)
    p.add_argument("--kernel-cap", type=int, default=512, help="largest L for the kernel route")
    p.set_defaults(length=512, mode="float")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in JSON_ONLY and args.format == "csv":
        print(f"{args.command}: structured report, use --format json", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args)
    except (SchemaError, RationalParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StarLatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(run(argv))
