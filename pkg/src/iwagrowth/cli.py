"""Command-line frontend.

Subcommands: logmat, valmat, kobrank, growth, selfcheck.  Output is JSON by
default (--pretty for indented or tabular form).  Exit codes: 0 success,
2 validation failure, 3 precision exhausted, 4 precondition failure,
5 infinite term.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .errors import (
    InfiniteTerm,
    IwagrowthError,
    NotFinite,
    PhiDividesF,
    PrecisionExhausted,
    ValidationError,
)
from .growth import GrowthScenario, sha_table
from .kobayashi import (
    CLOSED_FORM,
    RESULTANT_ORACLE,
    SNF_ORACLE,
    TowerOfQuotients,
    nabla_closed_form,
    nabla_resultant_oracle,
    nabla_snf_oracle,
)
from .iwapoly import IwaPoly
from .logmat import (
    LocalCurveData,
    h_matrix,
    m_matrix,
    signature,
    valuation_matrix,
    valuation_matrix_closed_form,
)
from .selfcheck import run_selfcheck

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PRECISION = 3
EXIT_PRECONDITION = 4
EXIT_INFINITE = 5


def _emit(payload, pretty: bool):
    if pretty:
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload))


def _parse_coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c.strip()) for c in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"bad coefficient list {text!r}: {exc}")


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c.strip()) for c in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"bad prime list {text!r}: {exc}")


def cmd_logmat(args) -> int:
    data = LocalCurveData(args.p, args.av)
    mat = h_matrix(data, args.n) if args.which == "h" else m_matrix(data, args.n)
    _emit(mat.to_json(), args.pretty)
    return EXIT_OK


def cmd_valmat(args) -> int:
    data = LocalCurveData(args.p, args.av)
    computed = valuation_matrix(data, args.n)
    closed = valuation_matrix_closed_form(data, args.n)
    payload = {
        "computed": computed.to_json(),
        "closed_form": closed.to_json(),
        "agree": computed.entries == closed.entries,
        "signature": signature(data, args.n),
    }
    _emit(payload, args.pretty)
    return EXIT_OK


_METHOD_MAP = {
    CLOSED_FORM: nabla_closed_form,
    RESULTANT_ORACLE: nabla_resultant_oracle,
    SNF_ORACLE: nabla_snf_oracle,
}


def cmd_kobrank(args) -> int:
    f = IwaPoly(args.p, _parse_coeffs(args.f))
    tower = TowerOfQuotients(f)
    if args.methods == "all":
        methods = list(_METHOD_MAP)
    else:
        methods = [m.strip() for m in args.methods.split(",")]
        unknown = [m for m in methods if m not in _METHOD_MAP]
        if unknown:
            raise ValidationError(f"unknown methods {unknown}; choose from {list(_METHOD_MAP)}")
    results = []
    for m in methods:
        if m == SNF_ORACLE and args.prec is not None:
            results.append(nabla_snf_oracle(tower, args.n, args.prec))
        else:
            results.append(_METHOD_MAP[m](tower, args.n))
    payload = {"results": [r.to_json() for r in results]}
    if len(results) > 1:
        payload["all_agree"] = len({r.value for r in results}) == 1
    _emit(payload, args.pretty)
    return EXIT_OK


def cmd_growth(args) -> int:
    try:
        with open(args.scenario) as fh:
            raw = json.load(fh)
        sc = GrowthScenario.from_json(raw)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValidationError(f"bad scenario file {args.scenario}: {exc!r}")
    rows = sha_table(sc, args.n_max)
    for r in rows:
        if r.warning:
            print(f"warning: n={r.n}: {r.warning}", file=sys.stderr)
    if args.format == "csv":
        fields = ["n", "parity", "S_or_T", "phi_mu", "lambda", "r_inf", "delta", "cumulative"]
        writer = csv.DictWriter(sys.stdout, fieldnames=fields, extrasaction="ignore")
        writer.writeheader()
        for r in rows:
            writer.writerow(r.to_json())
    elif args.pretty:
        fields = ["n", "parity", "S_or_T", "phi_mu", "lambda", "r_inf", "delta", "cumulative"]
        print("  ".join(f"{h:>10}" for h in fields))
        for r in rows:
            d = r.to_json()
            print("  ".join(f"{str(d[h]):>10}" for h in fields))
    else:
        for r in rows:
            print(json.dumps(r.to_json()))
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    ok = run_selfcheck(p_list=_parse_primes(args.p), n_max=args.n_max, seed=args.seed)
    return EXIT_OK if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwagrowth",
        description="Exact local Iwasawa-theoretic computations: logarithmic "
                    "matrices, Coleman image lattices, Kobayashi ranks, and "
                    "Sha-growth tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lm = sub.add_parser("logmat", help="emit H or M matrices as JSON")
    lm.add_argument("--p", type=int, required=True)
    lm.add_argument("--av", type=int, required=True)
    lm.add_argument("--n", type=int, required=True)
    lm.add_argument("--which", choices=("h", "m"), default="h")
    lm.add_argument("--pretty", action="store_true")
    lm.set_defaults(func=cmd_logmat)

    vm = sub.add_parser("valmat", help="valuation matrix vs closed form")
    vm.add_argument("--p", type=int, required=True)
    vm.add_argument("--av", type=int, required=True)
    vm.add_argument("--n", type=int, required=True)
    vm.add_argument("--pretty", action="store_true")
    vm.set_defaults(func=cmd_valmat)

    kb = sub.add_parser("kobrank", help="Kobayashi rank of Lambda/(f, omega_n)")
    kb.add_argument("--p", type=int, required=True)
    kb.add_argument("--f", required=True,
                    help="comma-separated coefficients, constant term first")
    kb.add_argument("--n", type=int, required=True)
    kb.add_argument("--methods", default="all",
                    help="comma list of closed_form,resultant_oracle,snf_oracle")
    kb.add_argument("--prec", type=int, default=None,
                    help="working precision for the elementary-divisor oracle")
    kb.add_argument("--pretty", action="store_true")
    kb.set_defaults(func=cmd_kobrank)

    gr = sub.add_parser("growth", help="Sha-growth table from a scenario file")
    gr.add_argument("--scenario", required=True)
    gr.add_argument("--n-max", type=int, required=True)
    gr.add_argument("--format", choices=("json", "csv"), default="json")
    gr.add_argument("--pretty", action="store_true")
    gr.set_defaults(func=cmd_growth)

    sc = sub.add_parser("selfcheck", help="run the full identity/oracle suites")
    sc.add_argument("--p", default="3,5,7", help="comma-separated primes")
    sc.add_argument("--n-max", type=int, default=9)
    sc.add_argument("--seed", type=int, default=0)
    sc.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PrecisionExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (NotFinite, PhiDividesF) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InfiniteTerm as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except IwagrowthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
