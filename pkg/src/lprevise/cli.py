"""Command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 when the result has no
answer sets, 3 when the result is the inconsistent set. ``revise`` takes its
files lowest priority first.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .postulates import POSTULATES, GeneratorConfig, UnknownPostulate, check_postulate, fuzz_postulates
from .revision import remainders, revise_sequence
from .semantics import AnswerSetResult, AnswerStatus, answer_sets, equivalent, reduct, strongly_equivalent
from .syntax import ParseError, Program, format_literals, parse_literals, parse_program, render_program
from .threeval import ThreeValuedInterpretation, min_reduct, three_valued_answer_sets

EXIT_OK, EXIT_ERROR, EXIT_NONE, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CliResult:
    code: int
    out: str
    err: str = ""


def _read(path: str) -> Program:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_program(text)
    except ParseError as exc:
        raise ParseError(exc.message, exc.line, exc.column, path) from None


def _status_code(result: AnswerSetResult) -> int:
    return {
        AnswerStatus.SETS: EXIT_OK,
        AnswerStatus.NONE: EXIT_NONE,
        AnswerStatus.INCONSISTENT: EXIT_INCONSISTENT,
    }[result.status]


def _sets_json(result: AnswerSetResult) -> dict:
    return {
        "status": result.status.value,
        "answer_sets": [[str(l) for l in sorted(s)] for s in result.sets],
    }


def _print_sets(out, result: AnswerSetResult, err):
    for s in result.sets:
        print(format_literals(s), file=out)
    if result.is_inconsistent:
        print("inconsistent: the only answer set is the set of all literals", file=err)


def cmd_solve(args, out, err) -> int:
    result = answer_sets(_read(args.file))
    if args.json:
        print(json.dumps(_sets_json(result)), file=out)
    else:
        _print_sets(out, result, err)
    return _status_code(result)


def cmd_three(args, out, err) -> int:
    p = _read(args.file)
    result = answer_sets(p)
    interps = three_valued_answer_sets(p) if result.is_sets else ()
    if args.json:
        data = {
            "status": result.status.value,
            "interpretations": [
                {"plus": [str(l) for l in sorted(x.plus)], "minus": [str(l) for l in sorted(x.minus)]}
                for x in interps
            ],
        }
        print(json.dumps(data), file=out)
    else:
        for x in interps:
            print(x, file=out)
        if result.is_inconsistent:
            print("inconsistent: the only answer set is the set of all literals", file=err)
    return _status_code(result)


def _print_program(out, p: Program, as_json: bool):
    text = render_program(p)
    if as_json:
        print(json.dumps({"program": text}), file=out)
    elif text:
        print(text, file=out)


def cmd_reduct(args, out, err) -> int:
    _print_program(out, reduct(_read(args.file), parse_literals(args.set)), args.json)
    return EXIT_OK


def cmd_minreduct(args, out, err) -> int:
    try:
        x = ThreeValuedInterpretation(parse_literals(args.plus), parse_literals(args.minus))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _print_program(out, min_reduct(_read(args.file), x), args.json)
    return EXIT_OK


def cmd_remainder(args, out, err) -> int:
    p1, p2 = _read(args.p1), _read(args.p2)
    rem = remainders(p1, p2)
    if rem.lattice:
        if args.json:
            print(json.dumps({"status": "lattice", "programs": []}), file=out)
        return _status_code(answer_sets(p2))
    if args.json:
        print(json.dumps({"status": "programs", "programs": [render_program(p) for p in rem]}), file=out)
    else:
        print("\n\n".join(render_program(p) or "% empty program" for p in rem), file=out)
    return EXIT_OK


def cmd_revise(args, out, err) -> int:
    outcome = revise_sequence([_read(f) for f in args.files])
    if args.json:
        data = outcome.to_json()
        if not args.trace:
            del data["traces"]
        print(json.dumps(data), file=out)
    else:
        _print_sets(out, outcome.answer_sets, err)
        if args.trace:
            for i, t in enumerate(outcome.traces, 1):
                print(f"% trace {i}", file=out)
                print(t, file=out)
    return _status_code(outcome.answer_sets)


def cmd_se_eq(args, out, err) -> int:
    p, q = _read(args.p), _read(args.q)
    se, eq = strongly_equivalent(p, q), equivalent(p, q)
    if args.json:
        print(json.dumps({"strongly_equivalent": se, "equivalent": eq}), file=out)
    else:
        print(f"strongly equivalent: {'yes' if se else 'no'}", file=out)
        print(f"equivalent: {'yes' if eq else 'no'}", file=out)
    return EXIT_OK


def cmd_check(args, out, err) -> int:
    names = [n for n in args.postulates.split(",") if n.strip()] or list(POSTULATES)
    try:
        if args.files:
            if len(names) != 1:
                raise UsageError("checking given programs needs exactly one --postulates name")
            report = check_postulate(names[0], [_read(f) for f in args.files])
            if args.json:
                print(json.dumps(report.to_json()), file=out)
            else:
                verdict = "holds" if report.holds else "fails"
                if not report.precondition_met:
                    verdict = "holds vacuously"
                print(f"{report.postulate}: {verdict}", file=out)
                if report.witness:
                    print(f"  {report.witness}", file=out)
            return EXIT_OK
        cfg = GeneratorConfig(
            seed=args.seed, max_atoms=args.max_atoms, max_rules=args.max_rules,
            max_body=args.max_body,
        )
        summaries = fuzz_postulates(cfg, args.iters, names)
    except UnknownPostulate as exc:
        raise UsageError(f"unknown postulate {exc.args[0]!r}") from None
    except ParseError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps([s.to_json() for s in summaries.values()]), file=out)
    else:
        for s in summaries.values():
            print(s, file=out)
            for r in s.counterexamples:
                progs = " | ".join(render_program(p).replace("\n", " ") or "(empty)" for p in r.programs)
                print(f"  {progs}: {r.witness}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lprevise", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="answer sets of a program")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("three", help="3-valued answer sets of a program")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_three)

    p = sub.add_parser("reduct", help="Gelfond-Lifschitz reduct by a literal set")
    p.add_argument("file")
    p.add_argument("--set", default="", help="comma-separated literals, e.g. 'a,-b'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduct)

    p = sub.add_parser("minreduct", help="min-reduct by a 3-valued interpretation")
    p.add_argument("file")
    p.add_argument("--plus", default="")
    p.add_argument("--minus", default="")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minreduct)

    p = sub.add_parser("remainder", help="remainders of P1 with respect to P2")
    p.add_argument("p1")
    p.add_argument("p2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_remainder)

    p = sub.add_parser("revise", help="revise P1 * ... * Pn (lowest priority first)")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_revise)

    p = sub.add_parser("se-eq", help="strong and plain equivalence of two programs")
    p.add_argument("p")
    p.add_argument("q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_se_eq)

    p = sub.add_parser("check", help="check postulates on given programs or by fuzzing")
    p.add_argument("files", nargs="*")
    p.add_argument("--postulates", default="", help="comma-separated names (default: all)")
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-atoms", type=int, default=5)
    p.add_argument("--max-rules", type=int, default=6)
    p.add_argument("--max-body", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> CliResult:
    out, err = io.StringIO(), io.StringIO()
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args, out, err)
    except UsageError as exc:
        print(exc, file=err)
        code = EXIT_ERROR
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        code = EXIT_ERROR
    except SystemExit as exc:  # --help
        code = EXIT_OK if exc.code in (None, 0) else EXIT_ERROR
    return CliResult(code, out.getvalue(), err.getvalue())


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    sys.stdout.write(result.out)
    sys.stderr.write(result.err)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
