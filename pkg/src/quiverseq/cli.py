"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (not periodic, not
sink-type, division failure, malformed matrix file), 2 on usage errors.

Vertex arguments are 1-based; matrix files use the JSON quiver format
``{"n": .., "frozen": .., "b": [[..]]}`` with a 0-indexed, row-major
integer matrix.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import ice as ice_mod
from . import linearise as lin_mod
from . import periodicity as per_mod
from . import recurrence as rec_mod
from .errors import DomainError
from .quiver import ExchangeMatrix


def _read_matrix(args) -> ExchangeMatrix:
    if getattr(args, "preset", None):
        return rec_mod.preset(args.preset)
    path = getattr(args, "input", None)
    if not path:
        raise DomainError("no input: pass --input FILE or --preset NAME")
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return ExchangeMatrix.from_json(text)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _write_matrix(B: ExchangeMatrix, args) -> None:
    text = B.to_json()
    out = getattr(args, "output", None)
    if out and out != "-":
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _int_list(text: str) -> list[int]:
    return [int(chunk) for chunk in text.split(",") if chunk.strip() != ""]


def _fraction_list(text: str) -> list[Fraction]:
    return [Fraction(chunk) for chunk in text.split(",") if chunk.strip() != ""]


def _matrix_flags(parser, with_preset: bool = True) -> None:
    parser.add_argument("-i", "--input", help="quiver JSON file ('-' for stdin)")
    if with_preset:
        parser.add_argument("--preset", help="named preset instead of a file")
    parser.add_argument("-o", "--output", help="output file (default stdout)")


# ---------------------------------------------------------------------------
# quiver subcommands
# ---------------------------------------------------------------------------


def _cmd_quiver_mutate(args) -> int:
    _write_matrix(_read_matrix(args).mutate(args.vertex), args)
    return 0


def _cmd_quiver_opposite(args) -> int:
    _write_matrix(_read_matrix(args).opposite(), args)
    return 0


def _cmd_quiver_period(args) -> int:
    period = per_mod.detect_period(_read_matrix(args), args.max)
    print(period if period is not None else "none")
    return 0


def _cmd_quiver_primitive(args) -> int:
    _write_matrix(per_mod.primitive(args.vertices, args.k, args.period, args.copy), args)
    return 0


def _cmd_quiver_period1(args) -> int:
    _write_matrix(per_mod.period1_from_weights(_int_list(args.weights)), args)
    return 0


def _cmd_quiver_decompose(args) -> int:
    B = _read_matrix(args)
    layers = per_mod.decompose_period1(B)
    if args.json:
        print(json.dumps({str(level): list(coeffs) for level, coeffs in layers.items()}))
    else:
        print(per_mod.layer_report(B.n, layers))
    return 0


def _cmd_quiver_fold(args) -> int:
    _write_matrix(per_mod.fold_to_period1(_read_matrix(args), args.period), args)
    return 0


# ---------------------------------------------------------------------------
# seq subcommands
# ---------------------------------------------------------------------------


def _recurrence_for(B: ExchangeMatrix):
    period = per_mod.detect_period(B.mutable_part(), 2)
    if period == 1:
        return rec_mod.recurrence_from_period1(B)
    if period == 2 and B.m_frozen == 0:
        return rec_mod.recurrence_from_period2(B)
    raise DomainError("matrix has no mutation period <= 2; cannot form a recurrence")


def _cmd_seq_run(args) -> int:
    B = _read_matrix(args)
    rec = _recurrence_for(B)
    init = _fraction_list(args.init) if args.init else [Fraction(1)] * rec.order
    params = _fraction_list(args.params) if args.params else [Fraction(1)] * rec.num_params
    run = rec_mod.iterate(rec, init, args.terms, params)
    if args.json:
        print(json.dumps([str(t) for t in run.terms]))
    else:
        for t in run.terms:
            print(t)
    return 0


def _cmd_seq_laurent(args) -> int:
    B = _read_matrix(args)
    rec = _recurrence_for(B)
    result = rec_mod.laurent_check(rec, args.steps)
    for idx, poly in enumerate(result.polynomials, start=1):
        print(f"x{idx} = {poly}")
    if result.ok:
        print(f"laurent: ok through {args.steps} new variables")
        return 0
    print(f"laurent: FAILED at variable x{result.failed_at}", file=sys.stderr)
    return 1


def _cmd_seq_decouple(args) -> int:
    ok = rec_mod.decoupling_check(args.vertices, args.k, args.terms)
    print("decouples" if ok else "MISMATCH")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# lin / pell subcommands
# ---------------------------------------------------------------------------


def _primitive_run_from_args(args):
    rec = rec_mod.primitive_recurrence(args.vertices, args.k)
    init = _fraction_list(args.init) if args.init else [Fraction(1)] * args.vertices
    return rec_mod.iterate(rec, init, args.terms)


def _certificate_dict(cert: lin_mod.LinearisationCertificate) -> dict:
    return {
        "N": cert.N,
        "k": cert.k,
        "copy": cert.copy_index,
        "c": [str(v) for v in cert.c.values],
        "S": str(cert.S),
        "window": list(cert.window),
    }


def _cmd_lin_check(args) -> int:
    run = _primitive_run_from_args(args)
    certs = lin_mod.linear_relation_check(run, args.k)
    print(json.dumps([_certificate_dict(c) for c in certs], indent=2))
    return 0


def _cmd_lin_s(args) -> int:
    if args.symbolic:
        poly = lin_mod.s_polynomial(args.vertices, args.k)
        print(str(poly).replace("x", "c"))
        return 0
    run = _primitive_run_from_args(args)
    c = lin_mod.j_values(run, args.k)
    print(lin_mod.s_coefficient(c))
    return 0


def _cmd_pell(args) -> int:
    witness = lin_mod.pell_solutions(args.vertices, args.count)
    print(
        json.dumps(
            {
                "N": witness.N,
                "parity": witness.parity,
                "D": witness.D,
                "target": witness.target,
                "pairs": [list(p) for p in witness.pairs],
            },
            indent=2,
        )
    )
    return 0


# ---------------------------------------------------------------------------
# ice subcommands
# ---------------------------------------------------------------------------


def _cmd_ice_check(args) -> int:
    verdict = ice_mod.ice_period1_check(_read_matrix(args))
    if verdict.valid:
        print("valid")
        return 0
    where = f"row {verdict.row}: " if verdict.row else ""
    print(f"violation: {where}{verdict.reason}", file=sys.stderr)
    return 1


def _cmd_ice_rows(args) -> int:
    specs = ice_mod.ice_rows_enumerate(_int_list(args.weights), args.l_max)
    N = len(_int_list(args.weights)) + 1
    for spec in specs:
        print(json.dumps({"t": spec.t, "l": spec.magnitude, "sign": spec.sign,
                          "row": list(spec.row(N))}))
    return 0


def _cmd_ice_recur(args) -> int:
    print(ice_mod.parameterized_recurrence(_read_matrix(args)).render())
    return 0


# ---------------------------------------------------------------------------
# report / serve
# ---------------------------------------------------------------------------


def _cmd_report(args) -> int:
    from . import report as report_mod

    B = _read_matrix(args)
    rec = _recurrence_for(B)
    params = [Fraction(1)] * rec.num_params
    run = rec_mod.iterate(rec, [Fraction(1)] * rec.order, args.terms, params)
    label = args.preset or args.input or "quiver"
    paths = report_mod.write_report(B, run, args.out_dir, label=label)
    for kind, path in paths.items():
        print(f"{kind}: {path}")
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    serve(args.port, host=args.host)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverseq",
        description="Mutation-periodic quivers and their Laurent recurrences",
    )
    top = parser.add_subparsers(dest="command", required=True)

    quiver = top.add_parser("quiver", help="matrix-level operations")
    qsub = quiver.add_subparsers(dest="subcommand", required=True)

    p = qsub.add_parser("mutate", help="mutate at a vertex")
    _matrix_flags(p)
    p.add_argument("-k", "--vertex", type=int, required=True)
    p.set_defaults(func=_cmd_quiver_mutate)

    p = qsub.add_parser("opposite", help="reverse all arrows")
    _matrix_flags(p)
    p.set_defaults(func=_cmd_quiver_opposite)

    p = qsub.add_parser("period", help="detect the mutation period")
    _matrix_flags(p)
    p.add_argument("--max", type=int, default=None, help="largest period to try")
    p.set_defaults(func=_cmd_quiver_period)

    p = qsub.add_parser("primitive", help="construct a primitive quiver")
    p.add_argument("-N", "--vertices", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", "--period", type=int, default=1)
    p.add_argument("-j", "--copy", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_quiver_primitive)

    p = qsub.add_parser("period1", help="build the period-1 quiver of a weight vector")
    p.add_argument("--weights", required=True, help="comma-separated m_1..m_{N-1}")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_quiver_period1)

    p = qsub.add_parser("decompose", help="primitive layers of a period-1 quiver")
    _matrix_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_quiver_decompose)

    p = qsub.add_parser("fold", help="fold a sink-type period-m quiver to period 1")
    _matrix_flags(p)
    p.add_argument("-m", "--period", type=int, required=True)
    p.set_defaults(func=_cmd_quiver_fold)

    seq = top.add_parser("seq", help="sequences from periodic quivers")
    ssub = seq.add_subparsers(dest="subcommand", required=True)

    p = ssub.add_parser("run", help="iterate the recurrence exactly")
    _matrix_flags(p)
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--init", help="comma-separated initial values (default ones); "
                                  "period-2 quivers take all N cluster values")
    p.add_argument("--params", help="comma-separated frozen-parameter values")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_seq_run)

    p = ssub.add_parser("laurent", help="symbolic Laurent verification")
    _matrix_flags(p)
    p.add_argument("--steps", type=int, default=8)
    p.set_defaults(func=_cmd_seq_laurent)

    p = ssub.add_parser("decouple", help="check the gcd(N,k)>1 interleaving")
    p.add_argument("-N", "--vertices", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--terms", type=int, default=40)
    p.set_defaults(func=_cmd_seq_decouple)

    lin = top.add_parser("lin", help="linearisation of primitive recurrences")
    lsub = lin.add_subparsers(dest="subcommand", required=True)

    p = lsub.add_parser("check", help="certify the three-term linear relation")
    p.add_argument("-N", "--vertices", type=int, required=True)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--terms", type=int, default=80)
    p.add_argument("--init", help="comma-separated rationals (default ones)")
    p.set_defaults(func=_cmd_lin_check)

    p = lsub.add_parser("s", help="the linear-relation coefficient S")
    p.add_argument("-N", "--vertices", type=int, required=True)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--terms", type=int, default=80)
    p.add_argument("--init", help="comma-separated rationals (default ones)")
    p.add_argument("--symbolic", action="store_true", help="print S as a polynomial in c_i")
    p.set_defaults(func=_cmd_lin_s)

    p = top.add_parser("pell", help="Pell solutions from the k=1 primitive run")
    p.add_argument("-N", "--vertices", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=_cmd_pell)

    ice = top.add_parser("ice", help="period-1 ice quivers")
    isub = ice.add_subparsers(dest="subcommand", required=True)

    p = isub.add_parser("check", help="verify the period-1 ice property")
    _matrix_flags(p)
    p.set_defaults(func=_cmd_ice_check)

    p = isub.add_parser("rows", help="enumerate admissible frozen rows")
    p.add_argument("--weights", required=True, help="comma-separated m_1..m_{N-1}")
    p.add_argument("--l-max", type=int, default=1)
    p.set_defaults(func=_cmd_ice_rows)

    p = isub.add_parser("recur", help="recurrence with parameters")
    _matrix_flags(p)
    p.set_defaults(func=_cmd_ice_recur)

    p = top.add_parser("report", help="figures and CSV for a quiver and its run")
    _matrix_flags(p)
    p.add_argument("--terms", type=int, default=30)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_report)

    p = top.add_parser("serve", help="JSON-over-HTTP explorer backend")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
