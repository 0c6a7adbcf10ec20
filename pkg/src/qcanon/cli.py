"""Command-line front end emitting stable JSON (and SVG/ASCII renderings).

Subcommands:

    basis       dual canonical basis of one weight slice
    canonical2  canonical basis of a two-factor product
    diagrams    arc-diagram listing, optionally filtered or rendered
    rmatrix     braiding operator matrices
    cable       the unit-weight collapse report
    verify      run the property suites

Exit codes: 0 success, 1 a property check failed (a machine-readable JSON
record is printed), 2 bad flags or request outside the configured bounds.
All JSON is emitted with sorted keys and canonical scalar serialization, so
identical requests produce byte-identical output.  The environment variable
QCANON_MAX_DIM, when set, caps the dimension of any weight slice a command
may touch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cabling import StructuralMismatchError, ZeroBlockError, cabling_report
from .canonical import (CountMismatchError, TriangularityViolationError,
                        canonical_basis_pair, dual_canonical_basis,
                        dual_factors, simple_factors)
from .diagrams import (InvalidDiagramError, NotInPError, WeightMismatchError,
                       enumerate_B, filter_invariant, filter_singular,
                       render_ascii, render_svg_many)
from .qring import BarAsymmetryError, InexactDivisionError, OddExponentError
from .rmatrix import (CrossCheckFailureError, NotReducedError, rcheck_matrix,
                      rcheck_longest, tau_theta_n, theta_matrix,
                      theta_n_matrix)
from .tensor import weight_space
from .verify import SUITE_ALIASES, run_suite
from .weightmod import NegativeWeightError, TruncationTooSmallError

SCHEMA = "qcanon/1"

_BAD_REQUEST = (NegativeWeightError, TruncationTooSmallError, NotInPError,
                ZeroBlockError, WeightMismatchError, ValueError, KeyError)
_PROPERTY_FAILURE = (TriangularityViolationError, CountMismatchError,
                     StructuralMismatchError, CrossCheckFailureError,
                     NotReducedError, InvalidDiagramError, BarAsymmetryError,
                     OddExponentError, InexactDivisionError, AssertionError)


def _parse_lambda(text: str) -> tuple[int, ...]:
    try:
        lams = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a weight list: {text!r}")
    if not lams or any(x < 0 for x in lams):
        raise argparse.ArgumentTypeError(
            f"weights must be nonnegative integers: {text!r}")
    return lams


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj: dict, output: str | None) -> None:
    _emit(json.dumps(obj, sort_keys=True, indent=2) + "\n", output)


def _guard(args, parser) -> None:
    if sum(args.lam) > args.max_sum:
        parser.error(f"sum(lambda) = {sum(args.lam)} exceeds the limit "
                     f"{args.max_sum} (raise with --max-sum)")
    cap = os.environ.get("QCANON_MAX_DIM")
    if cap:
        dim = weight_space(dual_factors(args.lam), args.level).dim
        if dim > int(cap):
            parser.error(f"weight slice dimension {dim} exceeds "
                         f"QCANON_MAX_DIM={cap}")


def _basis_json(lams, level, basis, kind) -> dict:
    return {
        "schema": SCHEMA,
        "kind": kind,
        "lambda": list(lams),
        "level": level,
        "weight": sum(lams) - 2 * level,
        "order": "lex",
        "basis": [{
            "index": list(b.index),
            "coeffs": [{"index": list(k), "value": b.coeff(k).to_pairs()}
                       for k in b.support()],
        } for b in basis],
    }


def _operator_json(op, lams, level, name, position=None) -> dict:
    entries = []
    for j, col in enumerate(op.source.indices):
        for i, row in enumerate(op.target.indices):
            val = op.matrix[i, j]
            if val:
                entries.append({"row": list(row), "col": list(col),
                                "value": val.to_pairs()})
    out = {
        "schema": SCHEMA,
        "op": name,
        "lambda": list(lams),
        "level": level,
        "source_index": [list(m) for m in op.source.indices],
        "target_index": [list(m) for m in op.target.indices],
        "entries": entries,
    }
    if position is not None:
        out["position"] = position
    return out


def cmd_basis(args, parser) -> int:
    _guard(args, parser)
    basis = dual_canonical_basis(args.lam, args.level)
    _dump(_basis_json(args.lam, args.level, basis, "dual_canonical"),
          args.output)
    return 0


def cmd_canonical2(args, parser) -> int:
    _guard(args, parser)
    if len(args.lam) != 2:
        parser.error("canonical2 needs exactly two weights")
    basis = canonical_basis_pair(args.lam, args.level)
    _dump(_basis_json(args.lam, args.level, basis, "canonical"), args.output)
    return 0


def cmd_diagrams(args, parser) -> int:
    _guard(args, parser)
    diagrams = enumerate_B(args.lam, args.level)
    if args.filter == "singular":
        diagrams = filter_singular(diagrams)
    elif args.filter == "invariant":
        diagrams = filter_invariant(diagrams)
    if args.render == "ascii":
        _emit("\n".join(render_ascii(d) for d in diagrams), args.output)
        return 0
    if args.render == "svg":
        _emit(render_svg_many(diagrams), args.output)
        return 0
    _dump({
        "schema": SCHEMA,
        "lambda": list(args.lam),
        "level": args.level,
        "filter": args.filter,
        "count": len(diagrams),
        "diagrams": [d.to_json_dict() for d in diagrams],
    }, args.output)
    return 0


def cmd_rmatrix(args, parser) -> int:
    _guard(args, parser)
    lams, level = args.lam, args.level
    if args.op == "theta":
        op = theta_matrix(simple_factors(lams), level)
    elif args.op == "theta_n":
        op = theta_n_matrix(simple_factors(lams), level)
    elif args.op == "tau_theta_n":
        op = tau_theta_n(dual_factors(lams), level)
    elif args.op == "rcheck":
        if args.pos is None:
            op = rcheck_longest(simple_factors(lams), level)
        else:
            op = rcheck_matrix(simple_factors(lams), level, args.pos)
    else:  # unreachable through argparse choices
        parser.error(f"unknown operator {args.op}")
    _dump(_operator_json(op, lams, level, args.op, args.pos), args.output)
    return 0


def cmd_cable(args, parser) -> int:
    _guard(args, parser)
    report = cabling_report(args.lam, args.level)
    _dump({"schema": SCHEMA, **report.to_json_dict()}, args.output)
    return 0


def cmd_verify(args, parser) -> int:
    results = run_suite(args.suite, args.max_weight_sum)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        sys.stdout.write(f"{status} {r.name} ({r.elapsed:.2f}s): {r.detail}\n")
    total = sum(r.elapsed for r in results)
    sys.stdout.write(f"{len(results) - len(failed)}/{len(results)} checks "
                     f"passed in {total:.2f}s\n")
    for r in failed:
        sys.stdout.write(json.dumps(r.failure, sort_keys=True) + "\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcanon",
        description="exact canonical-basis computations for quantum sl2 "
                    "tensor products")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_level=True):
        p.add_argument("--lambda", dest="lam", type=_parse_lambda,
                       required=True, metavar="L1,L2,...",
                       help="highest weights of the factors")
        if needs_level:
            p.add_argument("--level", type=_nonneg, required=True,
                           help="number of lowering steps below the top weight")
        p.add_argument("--format", choices=("json",), default="json",
                       help="output format (JSON is canonical)")
        p.add_argument("--max-sum", type=_nonneg, default=12,
                       help="guard rail on sum(lambda) (default 12)")
        p.add_argument("-o", "--output", default=None,
                       help="write to a file instead of stdout")

    p = sub.add_parser("basis", help="dual canonical basis of a weight slice")
    common(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("canonical2",
                       help="canonical basis of a two-factor product")
    common(p)
    p.set_defaults(func=cmd_canonical2)

    p = sub.add_parser("diagrams", help="list or render arc diagrams")
    common(p)
    p.add_argument("--filter", choices=("singular", "invariant"), default=None)
    p.add_argument("--render", choices=("ascii", "svg"), default=None)
    p.set_defaults(func=cmd_diagrams)

    p = sub.add_parser("rmatrix", help="braiding operator matrices")
    common(p)
    p.add_argument("--op", choices=("theta", "theta_n", "tau_theta_n",
                                    "rcheck"), required=True)
    p.add_argument("--pos", type=int, default=None,
                   help="adjacent position for --op rcheck (default: "
                        "the longest braiding)")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("cable", help="unit-weight collapse report")
    common(p)
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", default="all",
                   help="one of %s or a check name" %
                        ", ".join(sorted(SUITE_ALIASES)))
    p.add_argument("--max-weight-sum", type=_nonneg, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except _PROPERTY_FAILURE as exc:
        sys.stdout.write(json.dumps(
            {"schema": SCHEMA, "failure": True,
             "error_type": type(exc).__name__, "error": str(exc)},
            sort_keys=True) + "\n")
        return 1
    except _BAD_REQUEST as exc:
        sys.stderr.write(f"qcanon: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
