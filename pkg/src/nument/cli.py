"""Command-line interface.

Every subcommand parses its arguments, calls one library function and prints
JSON on stdout.  Exit codes: 0 success, 1 precondition or usage error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .arith import factorize
from .cubic import CubicField, classify_prime, cross_check, dedekind_oracle
from .cyclotomic import CyclotomicGeneratorSpec, ideal_of_generator, splitting_type
from .entropy import integer_divergence, integer_entropy
from .errors import NumentError
from .ideals import IdealFactorization, ideal_divergence, ideal_entropy
from .search import divergence_zero_scan, min_r_negative, scan_system, write_grid_csv
from .verify import CRITERIA, run_all


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(payload) -> None:
    print(json.dumps(payload))


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    return range(int(lo), int(hi) + 1)


def _rational_part(text: str) -> tuple[int, int]:
    p, _, k = text.partition(":")
    return int(p), int(k or 1)


def cmd_entropy(args):
    fact = factorize(args.n)
    _emit({"n": args.n, "omega": fact.little_omega, "big_omega": fact.big_omega,
           "entropy": integer_entropy(fact)})


def cmd_divergence(args):
    _emit({"n": args.n, "m": args.m, "divergence": integer_divergence(args.n, args.m)})


def _ideal_json(ideal: IdealFactorization) -> dict:
    return {"ideal": ideal.dump(), "omega": ideal.little_omega, "big_omega": ideal.big_omega}


def cmd_ideal_entropy(args):
    ideal = IdealFactorization.parse(args.exponents)
    _emit({**_ideal_json(ideal), "entropy": ideal_entropy(ideal)})


def cmd_ideal_divergence(args):
    left, right = IdealFactorization.parse(args.left), IdealFactorization.parse(args.right)
    _emit({"left": left.dump(), "right": right.dump(), "divergence": ideal_divergence(left, right)})


def cmd_cyclo_split(args):
    _emit(splitting_type(args.p, args.n).as_dict())


def cmd_cyclo_ideal(args):
    spec = CyclotomicGeneratorSpec(args.conductor, tuple(args.rational), args.lam)
    ideal = ideal_of_generator(spec)
    _emit({"conductor": args.conductor, **_ideal_json(ideal), "entropy": ideal_entropy(ideal)})


def cmd_cubic_classify(args):
    cubic = CubicField.unchecked(args.a, args.b) if args.allow_reducible else CubicField(args.a, args.b)
    pattern = dedekind_oracle(cubic, args.p)
    out = {"a": args.a, "b": args.b, "p": args.p, "delta": cubic.delta,
           "oracle_verdict": "abstain" if pattern is None else str(pattern)}
    if not args.oracle_only:
        verdict = classify_prime(cubic, args.p)
        out["condition"] = verdict.triggered_condition.value
        out["paper_verdict"] = verdict.outcome.value
    _emit(out)


def cmd_cubic_cross_check(args):
    section = cross_check(args.a_range, args.b_range, range(5, args.p_max + 1))
    kinds = section.by_kind()
    payload = {
        "summary": section.summary(),
        "known_discrepancies": {
            k: [r.as_dict() for r in v] for k, v in sorted(kinds.items()) if k != "agree"
        },
    }
    if not args.summary_only:
        payload["records"] = [r.as_dict() for r in section.records]
    _emit(payload)


def cmd_scan_system(args):
    sols = scan_system(args.bound, allow_negative_v=args.allow_negative)
    _emit([list(s.as_tuple()) for s in sols])


def cmd_scan_thresholds(args):
    _emit([[s, min_r_negative(s)] for s in range(1, args.s_max + 1)])


def cmd_scan_divergence(args):
    _emit([list(t) for t in divergence_zero_scan(args.budget)])


def cmd_grid(args):
    if args.out is None:
        write_grid_csv(sys.stdout, args.s_max, args.r_max)
        return
    with open(args.out, "w", newline="") as fh:
        rows = write_grid_csv(fh, args.s_max, args.r_max)
    _emit({"rows": rows, "out": str(args.out)})


def cmd_verify(args):
    report = run_all(args.criteria)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text)
    for key in args.criteria or sorted(CRITERIA):
        name = CRITERIA[key][0]
        failed = report.failures(f"c{key}.")
        print(f"criterion {key} ({name}): {'FAIL' if failed else 'pass'}", file=sys.stderr)
    if not args.out:
        sys.stdout.write(text)
    return 0 if report.ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nument", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s (kernels: {kernels.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entropy", help="H(n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("divergence", help="D(n||m)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_divergence)

    ideal = sub.add_parser("ideal", help="entropy / divergence of ideals").add_subparsers(
        dest="ideal_command", required=True, parser_class=_Parser)
    p = ideal.add_parser("entropy")
    p.add_argument("--exponents", required=True, help='"1,4" or "(2)^1 (1-xi)^4"')
    p.set_defaults(func=cmd_ideal_entropy)
    p = ideal.add_parser("divergence")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_ideal_divergence)

    cyclo = sub.add_parser("cyclo", help="cyclotomic splitting").add_subparsers(
        dest="cyclo_command", required=True, parser_class=_Parser)
    p = cyclo.add_parser("split")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cyclo_split)
    p = cyclo.add_parser("ideal")
    p.add_argument("--conductor", type=int, required=True)
    p.add_argument("--rational", type=_rational_part, action="append", default=[], metavar="p:k")
    p.add_argument("--lambda", dest="lam", type=int, default=0, metavar="T")
    p.set_defaults(func=cmd_cyclo_ideal)

    cubic = sub.add_parser("cubic", help="X^3 - aX + b").add_subparsers(
        dest="cubic_command", required=True, parser_class=_Parser)
    p = cubic.add_parser("classify")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--paper-literal", action="store_true", default=True,
                      help="literal rule plus oracle (default)")
    mode.add_argument("--oracle-only", action="store_true")
    p.add_argument("--allow-reducible", action="store_true",
                   help="skip the irreducibility check")
    p.set_defaults(func=cmd_cubic_classify)
    p = cubic.add_parser("cross-check")
    p.add_argument("--a-range", type=_int_range, default=range(-20, 21), metavar="LO:HI")
    p.add_argument("--b-range", type=_int_range, default=range(-20, 21), metavar="LO:HI")
    p.add_argument("--p-max", type=int, default=97)
    p.add_argument("--summary-only", action="store_true")
    p.set_defaults(func=cmd_cubic_cross_check)

    scan = sub.add_parser("scan", help="exhaustive searches").add_subparsers(
        dest="scan_command", required=True, parser_class=_Parser)
    p = scan.add_parser("system")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--allow-negative", action="store_true")
    p.set_defaults(func=cmd_scan_system)
    p = scan.add_parser("thresholds")
    p.add_argument("--s-max", type=int, required=True)
    p.set_defaults(func=cmd_scan_thresholds)
    p = scan.add_parser("divergence")
    p.add_argument("--budget", type=int, required=True)
    p.set_defaults(func=cmd_scan_divergence)

    p = sub.add_parser("grid", help="CSV of the entropy-gap function")
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("verify", help="run the reproduction suite")
    p.add_argument("--out", type=Path)
    p.add_argument("--criteria", type=int, nargs="+", choices=sorted(CRITERIA))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except NumentError as exc:
        print(f"nument: {exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
