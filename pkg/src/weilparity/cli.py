"""Batch command-line front end.

Subcommands::

    cyclo <n>                                  n-th cyclotomic polynomial
    minpoly --p P --n N --sign {+,-} --t T     full-degree minimal polynomial
    enumerate --g G --p P --n N                all degree-2g candidates
    verify --gmax G --pmax P --n N [--n N ...] parity check over a grid
    detect-half --g G --p P --n N              half-degree specs within 2g
    bounds --g G --p P --n N --file PATH       bound checks on a polynomial file

Every subcommand accepts ``--format {tsv,structured}`` (default tsv) and
produces byte-identical output for identical inputs.  Exit codes:
0 success, 1 parity-contract violation, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .bounds import BoundsReport, full_bounds_report
from .cyclotomic import cyclotomic, totient
from .enumerator import (
    ParityReport,
    half_degree_candidates,
    verify_grid,
    verify_parity_theorem,
)
from .errors import (
    CapExceeded,
    HalfDegreeUnsupported,
    NotDivisible,
    OutOfRange,
    ParseError,
    ShapeError,
)
from .intpoly import IntPoly
from .weil import WeilParams, minpoly_full_degree

_SIGN_TEXT = {1: "+", -1: "-"}


def ingest_reference(path: str | Path, skip_blank: bool = True) -> list[IntPoly]:
    """Parse a polynomial text file: one ascending coefficient line each.

    Lines starting with ``#`` are comments.  A blank line denotes the
    zero polynomial and is skipped unless ``skip_blank`` is false.
    Raises :class:`ParseError` with the offending line number.
    """
    polys = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if line.startswith("#"):
                continue
            if not line:
                if not skip_blank:
                    polys.append(IntPoly.zero())
                continue
            try:
                polys.append(IntPoly.from_line(line))
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
    return polys


def _factor_summary(candidate) -> str:
    return ";".join(
        f"{_SIGN_TEXT[s.q_star_sign]}:{s.t}:{m}" for s, m in candidate.factors
    )


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _parity_rows(report: ParityReport) -> list[str]:
    p = report.params
    return [
        "\t".join(
            (
                str(p.g),
                str(p.p),
                str(p.n),
                c.poly.to_line(),
                _bool(c.poly.is_even()),
                _factor_summary(c),
            )
        )
        for c in report.candidates
    ]


def _parity_json(report: ParityReport) -> dict:
    p = report.params
    return {
        "g": p.g,
        "p": p.p,
        "n": p.n,
        "total_candidates": report.total_candidates,
        "odd_candidates": report.odd_candidates,
        "candidates": [
            {
                "coeffs": list(c.poly.coeffs),
                "even": c.poly.is_even(),
                "factors": [
                    {"sign": s.q_star_sign, "t": s.t, "mult": m}
                    for s, m in c.factors
                ],
            }
            for c in report.candidates
        ],
        "half_degree_specs": [
            {"sign": s.q_star_sign, "t": s.t} for s in report.half_degree_specs
        ],
    }


def _bounds_json(report: BoundsReport) -> dict:
    p = report.params
    return {
        "g": p.g,
        "p": p.p,
        "n": p.n,
        "symmetric": report.symmetric_ok,
        "lemma_a1": report.lemma_a1_ok,
        "per_coefficient": [
            {
                "k": c.k,
                "a_k": c.value,
                "archimedean": c.archimedean_ok,
                "valuation": c.valuation_ok,
            }
            for c in report.per_coefficient
        ],
    }


_BOUNDS_HEADER = "g\tp\tn\ta_values\tsymmetric\tlemma_a1\tarchimedean\tvaluation"


def _bounds_row(report: BoundsReport) -> str:
    p = report.params
    return "\t".join(
        (
            str(p.g),
            str(p.p),
            str(p.n),
            " ".join(str(c.value) for c in report.per_coefficient),
            _bool(report.symmetric_ok),
            _bool(report.lemma_a1_ok),
            _bool(all(c.archimedean_ok for c in report.per_coefficient)),
            _bool(all(c.valuation_ok for c in report.per_coefficient)),
        )
    )


def emit_report(report: ParityReport | BoundsReport, output_format: str) -> str:
    """Render one report: TSV rows or the structured JSON schema."""
    if isinstance(report, ParityReport):
        if output_format == "structured":
            return json.dumps(_parity_json(report))
        header = "g\tp\tn\tcoeffs\teven\tfactors"
        return "\n".join([header] + _parity_rows(report))
    if output_format == "structured":
        return json.dumps(_bounds_json(report))
    return "\n".join([_BOUNDS_HEADER, _bounds_row(report)])


def _cmd_cyclo(args) -> int:
    poly = cyclotomic(args.n)
    if args.format == "structured":
        print(json.dumps({"n": args.n, "coeffs": list(poly.coeffs)}))
    else:
        print(poly.to_line())
    return 0


def _cmd_minpoly(args) -> int:
    # g plays no role in the minimal polynomial; pin the smallest value.
    params = WeilParams(p=args.p, n=args.n, g=1)
    sign = 1 if args.sign == "+" else -1
    poly = minpoly_full_degree(params, sign, args.t)
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "p": args.p,
                    "n": args.n,
                    "sign": sign,
                    "t": args.t,
                    "degree": len(poly.coeffs) - 1,
                    "coeffs": list(poly.coeffs),
                }
            )
        )
    else:
        print(poly.to_line())
    return 0


def _cmd_enumerate(args) -> int:
    params = WeilParams(p=args.p, n=args.n, g=args.g)
    report = verify_parity_theorem(params)
    print(emit_report(report, args.format))
    return 0 if report.contract_ok else 1


def _cmd_verify(args) -> int:
    result = verify_grid(args.gmax, args.pmax, args.n)
    if args.format == "structured":
        print(json.dumps([_parity_json(r) for r in result.reports]))
    else:
        lines = ["g\tp\tn\ttotal_candidates\todd_candidates\thalf_degree_specs\tok"]
        for r in result.reports:
            p = r.params
            lines.append(
                "\t".join(
                    (
                        str(p.g),
                        str(p.p),
                        str(p.n),
                        str(r.total_candidates),
                        str(r.odd_candidates),
                        str(len(r.half_degree_specs)),
                        _bool(r.contract_ok),
                    )
                )
            )
        print("\n".join(lines))
    if not result.all_ok:
        print("parity contract violated in at least one grid cell", file=sys.stderr)
        return 1
    return 0


def _cmd_detect_half(args) -> int:
    params = WeilParams(p=args.p, n=args.n, g=args.g)
    specs = half_degree_candidates(params)
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "g": args.g,
                    "p": args.p,
                    "n": args.n,
                    "half_degree_specs": [
                        {"sign": s.q_star_sign, "t": s.t} for s in specs
                    ],
                }
            )
        )
    else:
        lines = ["sign\tt\tdegree"]
        for s in specs:
            lines.append(f"{_SIGN_TEXT[s.q_star_sign]}\t{s.t}\t{totient(4 * s.t) // 2}")
        print("\n".join(lines))
    if params.p > 2 * params.g + 1 and specs:
        print("half-degree spec found although p > 2g+1", file=sys.stderr)
        return 1
    return 0


def _cmd_bounds(args) -> int:
    params = WeilParams(p=args.p, n=args.n, g=args.g)
    polys = ingest_reference(args.file, skip_blank=args.skip_blank)
    reports = [full_bounds_report(poly, params) for poly in polys]
    if args.format == "structured":
        print(json.dumps([_bounds_json(rep) for rep in reports]))
    else:
        print("\n".join([_BOUNDS_HEADER] + [_bounds_row(rep) for rep in reports]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    # --format is accepted before or after the subcommand; SUPPRESS keeps
    # the subparser from clobbering a value parsed by the main parser.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("tsv", "structured"),
        default=argparse.SUPPRESS,
        help="output format (default tsv)",
    )

    parser = argparse.ArgumentParser(
        prog="weilparity",
        description="Exact checks on supersingular Weil polynomial candidates.",
    )
    parser.add_argument(
        "--format", choices=("tsv", "structured"), default="tsv", help=argparse.SUPPRESS
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cyclo = sub.add_parser("cyclo", parents=[common], help="print a cyclotomic polynomial")
    cyclo.add_argument("n", type=int)
    cyclo.set_defaults(func=_cmd_cyclo)

    minpoly = sub.add_parser(
        "minpoly", parents=[common], help="full-degree Weil number minimal polynomial"
    )
    minpoly.add_argument("--p", type=int, required=True)
    minpoly.add_argument("--n", type=int, required=True)
    minpoly.add_argument("--sign", choices=("+", "-"), required=True)
    minpoly.add_argument("--t", type=int, required=True)
    minpoly.set_defaults(func=_cmd_minpoly)

    enum = sub.add_parser(
        "enumerate", parents=[common], help="enumerate degree-2g candidates"
    )
    enum.add_argument("--g", type=int, required=True)
    enum.add_argument("--p", type=int, required=True)
    enum.add_argument("--n", type=int, required=True)
    enum.set_defaults(func=_cmd_enumerate)

    verify = sub.add_parser(
        "verify", parents=[common], help="check the parity contract over a grid"
    )
    verify.add_argument("--gmax", type=int, required=True)
    verify.add_argument("--pmax", type=int, required=True)
    verify.add_argument("--n", type=int, action="append", required=True)
    verify.set_defaults(func=_cmd_verify)

    detect = sub.add_parser(
        "detect-half", parents=[common], help="list half-degree specs fitting in 2g"
    )
    detect.add_argument("--g", type=int, required=True)
    detect.add_argument("--p", type=int, required=True)
    detect.add_argument("--n", type=int, required=True)
    detect.set_defaults(func=_cmd_detect_half)

    bounds = sub.add_parser(
        "bounds", parents=[common], help="bound checks on a polynomial file"
    )
    bounds.add_argument("--g", type=int, required=True)
    bounds.add_argument("--p", type=int, required=True)
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--file", type=str, required=True)
    bounds.add_argument(
        "--skip-blank",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="skip blank lines instead of reading them as zero polynomials",
    )
    bounds.set_defaults(func=_cmd_bounds)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        OutOfRange,
        CapExceeded,
        ShapeError,
        ParseError,
        HalfDegreeUnsupported,
        NotDivisible,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
