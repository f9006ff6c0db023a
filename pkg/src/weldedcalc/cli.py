"""Command-line front end.

Exit codes: 0 ok, 1 usage error, 2 parse error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .alexander import AlexanderError, alpha_series
from .diagram import ClosureList, DiagramError, closure, emit_gauss
from .finite_type import FiniteTypeError, ft_test
from .formats import FORMATS, InputError, load_diagram
from .invariants import InvariantError, invariant_vector, parse_descriptor
from .normal_form import NormalFormError, normal_form, verify_roundtrip
from .relations import conjecture_evidence, run_suite
from .tables import regenerate

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _input_args(p):
    p.add_argument("input", nargs="?", help="input file, or - for stdin")
    p.add_argument("--text", help="inline input instead of a file")
    p.add_argument("--format", choices=FORMATS, default="gauss")
    p.add_argument("--strands", type=int, help="strand count for word input")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weldedcalc", description="Invariants and normal forms of welded string links.")
    p.add_argument("--out", help="write output to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("invariants", help="print the classifying invariant vector as JSON")
    _input_args(q)
    q.add_argument("--degree", type=int, default=2, choices=(1, 2, 3))
    q.add_argument("--derived", action="store_true", help="also print derived combinations")
    q.add_argument("--variant", choices=("notation", "matrix"), default="notation")

    q = sub.add_parser("closure", help="close into a long knot and print its alpha series")
    _input_args(q)
    q.add_argument("--list", required=True, dest="clist",
                   help="comma-separated indices, negative = reversed, e.g. 1,-2")
    q.add_argument("--kmax", type=int, default=5)
    q.add_argument("--json", action="store_true")

    q = sub.add_parser("normal-form", help="print the normal-form word")
    _input_args(q)
    q.add_argument("--degree", type=int, default=2, choices=(1, 2, 3))
    q.add_argument("--variant", choices=("notation", "matrix"), default="notation")
    q.add_argument("--verify", action="store_true", help="round-trip through the invariant vector")
    q.add_argument("--json", action="store_true")

    q = sub.add_parser("ft-check", help="finite-type alternating-sum test, JSON report")
    _input_args(q)
    q.add_argument("--invariant", required=True, help="descriptor key such as LINK:1,2 or CLOSE:[1,-2]:2")
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--budget", type=int, default=2_000_000)
    q.add_argument("--seed", type=int, default=0)

    sub.add_parser("relations", help="check the built-in relation suite")
    sub.add_parser("conjecture", help="compare degree-3 vectors of A*D and B*C")
    q = sub.add_parser("tables", help="regenerate the published tables and diff against fixtures")
    q.add_argument("--fixtures", help="fixture directory (default: $WELDEDCALC_FIXTURES or bundled)")
    return p


def _read(args) -> str:
    if (args.input is None) == (args.text is None):
        raise UsageError("give exactly one of an input file or --text")
    if args.text is not None:
        return args.text
    if args.input == "-":
        return sys.stdin.read()
    try:
        return Path(args.input).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc


def _diagram(args):
    return load_diagram(_read(args), args.format, args.strands)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _cmd_invariants(args, out):
    D = _diagram(args)
    v = invariant_vector(D, args.degree, derived=args.derived, variant=args.variant)
    out.append(_dump(v.as_dict()))
    return EXIT_OK


def _cmd_closure(args, out):
    D = _diagram(args)
    try:
        items = [int(x) for x in args.clist.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad closure list {args.clist!r}") from exc
    if not items or any(not 1 <= abs(i) <= D.n for i in items):
        raise UsageError(f"closure list {args.clist!r} does not fit {D.n} strands")
    try:
        R = ClosureList.of(*items)
    except DiagramError as exc:
        raise UsageError(str(exc)) from exc
    K = closure(D, R)
    a = alpha_series(K, args.kmax)
    if args.json:
        out.append(_dump({"list": list(R.signed()), "gauss": emit_gauss(K),
                          "alpha": {str(k): v for k, v in a.as_dict().items()}}))
    else:
        out.append(emit_gauss(K).rstrip("\n"))
        out.append(str(a))
    return EXIT_OK


def _cmd_normal_form(args, out):
    D = _diagram(args)
    if args.verify:
        rep = verify_roundtrip(D, args.degree, args.variant)
        if args.json:
            out.append(_dump(rep.as_dict()))
        else:
            out.append(str(rep.word))
            if rep.conjecture_dependent:
                out.append("conjecture-dependent: yes (A*D ~ B*C assumed)")
            out.append("round-trip: " + ("match" if rep.match else "MISMATCH"))
            for k, (a, b) in rep.mismatches.items():
                out.append(f"  {k}: input {a}, normal form {b}")
        return EXIT_OK if rep.match else EXIT_VERIFY
    w = normal_form(D, args.degree, args.variant)
    if args.json:
        out.append(_dump({"degree": args.degree, "word": str(w),
                          "conjecture_dependent": w.conjecture_dependent}))
    else:
        out.append(str(w))
        if w.conjecture_dependent:
            out.append("conjecture-dependent: yes (A*D ~ B*C assumed)")
    return EXIT_OK


def _cmd_ft_check(args, out):
    D = _diagram(args)
    nu = parse_descriptor(args.invariant)
    rep = ft_test(D, nu, args.degree, args.budget, args.seed)
    out.append(_dump(rep.as_dict()))
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _cmd_relations(args, out):
    results = run_suite()
    out.extend(r.line() for r in results)
    bad = sum(not r.holds for r in results)
    out.append(f"{len(results) - bad}/{len(results)} relations hold")
    return EXIT_OK if not bad else EXIT_VERIFY


def _cmd_conjecture(args, out):
    ad, bc, diff = conjecture_evidence()
    out.append(_dump({"A*D": ad.as_dict(), "B*C": bc.as_dict(),
                      "difference": {k: a - b for k, (a, b) in diff.items()},
                      "coincide": not diff}))
    return EXIT_OK


def _cmd_tables(args, out):
    try:
        result = regenerate(args.fixtures)
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from exc
    bad = 0
    for name, diffs in result.items():
        out.append(f"{'OK  ' if not diffs else 'DIFF'} {name}")
        for d in diffs:
            out.append("  " + d.line())
        bad += len(diffs)
    out.append(f"{bad} mismatching cells")
    return EXIT_OK if not bad else EXIT_VERIFY


COMMANDS = {
    "invariants": _cmd_invariants, "closure": _cmd_closure,
    "normal-form": _cmd_normal_form, "ft-check": _cmd_ft_check,
    "relations": _cmd_relations, "conjecture": _cmd_conjecture, "tables": _cmd_tables,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out: List[str] = []
    try:
        code = COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"weldedcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, DiagramError) as exc:
        print(f"weldedcalc: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvariantError, NormalFormError, FiniteTypeError, AlexanderError) as exc:
        print(f"weldedcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "\n".join(out) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
