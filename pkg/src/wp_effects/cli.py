"""Command-line front end: run a program file, check a postcondition against
the contract, or sweep the builtin program space.

Exit codes: 0 success (and, for check, no contract violation), 1 parse/type
errors, unknown names, run errors, or contract violations; 2 malformed or
missing env/state literals and usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .dsl import (
    DslRunError,
    DslTypeError,
    LiteralError,
    ParseError,
    compile_post,
    compile_program,
    parse_program,
    parse_value_literal,
    typecheck,
    value_to_jsonable,
    value_to_text,
)
from .dsl.syntax import UNIT, UnitShape
from .semantics import run_either, run_rws
from .sweep import sweep_either_contract, sweep_rws_contract
from .wp import ContractReport, check_contract_either, check_contract_rws

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_LITERAL = 2


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _emit_json(obj: Any) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _load(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    pf = parse_program(text)
    typecheck(pf)
    return pf


def _rws_context(pf, args) -> tuple[Any, Any] | int:
    env_shape = pf.env_shape if pf.env_shape is not None else UNIT
    if args.env is None:
        if not isinstance(env_shape, UnitShape):
            return _fail(EXIT_LITERAL, "an env literal is required (--env)")
        env = None
    else:
        env = parse_value_literal(args.env, env_shape)
    if args.state is None:
        return _fail(EXIT_LITERAL, "a state literal is required (--state)")
    state = parse_value_literal(args.state, pf.state_shape)
    return env, state


def cmd_run(args) -> int:
    try:
        pf = _load(args.file)
    except (ParseError, DslTypeError, OSError) as exc:
        return _fail(EXIT_ERROR, str(exc))

    try:
        if pf.kind == "either":
            if args.env is not None or args.state is not None:
                return _fail(EXIT_LITERAL, "--env/--state only apply to rws programs")
            program = compile_program(pf)
            outcome = run_either(program)
            if args.format == "json":
                _emit_json({"kind": "either", "result": value_to_jsonable(outcome)})
            else:
                print(value_to_text(outcome))
        else:
            context = _rws_context(pf, args)
            if isinstance(context, int):
                return context
            env, state = context
            program = compile_program(pf)
            outcome = run_rws(program, env, state)
            if args.format == "json":
                _emit_json(
                    {
                        "kind": "rws",
                        "result": value_to_jsonable(outcome.value),
                        "state": value_to_jsonable(outcome.state),
                        "outputs": [value_to_jsonable(w) for w in outcome.outputs],
                    }
                )
            else:
                print(f"result: {value_to_text(outcome.value)}")
                print(f"state: {value_to_text(outcome.state)}")
                print(f"outputs: {value_to_text(outcome.outputs)}")
    except LiteralError as exc:
        return _fail(EXIT_LITERAL, str(exc))
    except DslRunError as exc:
        return _fail(EXIT_ERROR, str(exc))
    return EXIT_OK


def _leaf_jsonable(leaf) -> dict:
    return {
        "path": ".".join(leaf.path),
        "hypotheses": list(leaf.hypotheses),
        "status": leaf.status,
    }


def _report_single(report: ContractReport, fmt: str) -> None:
    if fmt == "json":
        _emit_json(
            {
                "kind": report.kind,
                "cases": 1,
                "discharged": report.discharged,
                "run_satisfies": report.run_satisfies,
                "exact": report.exact,
                "leaves": [_leaf_jsonable(leaf) for leaf in report.leaves],
                "violations": 1 if report.violation else 0,
            }
        )
        return
    for leaf in report.leaves:
        hyps = "; ".join(leaf.hypotheses) if leaf.hypotheses else "no hypotheses"
        print(f"{leaf.status.upper():7} {'.'.join(leaf.path)}  [{hyps}]")
    print(f"discharged: {report.discharged}  run satisfies: {report.run_satisfies}")
    print(f"violations: {1 if report.violation else 0}")


def _value_domain(bound: int) -> tuple:
    return tuple(range(-(bound // 2), bound - bound // 2))


def cmd_check(args) -> int:
    try:
        pf = _load(args.file)
    except (ParseError, DslTypeError, OSError) as exc:
        return _fail(EXIT_ERROR, str(exc))

    if args.sweep:
        if pf.kind == "either":
            result = sweep_either_contract(max_height=args.depth, values=_value_domain(args.bound))
        else:
            result = sweep_rws_contract(max_height=args.depth)
        notes = []
        if result.truncated:
            notes.append(f"sweep truncated at {result.cases} cases")
        if args.format == "json":
            payload = {
                "kind": pf.kind,
                "cases": result.cases,
                "exact": result.exact,
                "leaves": [],
                "violations": len(result.violations),
            }
            if notes:
                payload["notes"] = notes
            _emit_json(payload)
        else:
            print(f"sweep: {result.cases} cases, {len(result.violations)} violations, exact: {result.exact}")
            for note in notes:
                print(f"note: {note}")
        return EXIT_OK if not result.violations else EXIT_ERROR

    if args.post is None:
        return _fail(EXIT_LITERAL, "check needs --post NAME (or --sweep)")
    if args.post not in dict(pf.posts):
        return _fail(EXIT_ERROR, f"unknown postcondition: {args.post}")

    try:
        post = compile_post(pf, args.post)
        if pf.kind == "either":
            if args.env is not None or args.state is not None:
                return _fail(EXIT_LITERAL, "--env/--state only apply to rws programs")
            program = compile_program(pf)
            report = check_contract_either(program, post, label=args.post)
        else:
            context = _rws_context(pf, args)
            if isinstance(context, int):
                return context
            env, state = context
            program = compile_program(pf)
            report = check_contract_rws(program, env, state, post, label=args.post)
    except LiteralError as exc:
        return _fail(EXIT_LITERAL, str(exc))
    except DslRunError as exc:
        return _fail(EXIT_ERROR, str(exc))

    _report_single(report, args.format)
    return EXIT_OK if not report.violation else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wp-effects", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="parse, check, compile, and run a program file")
    run.add_argument("file")
    run.add_argument("--env", help="environment literal (rws only)")
    run.add_argument("--state", help="starting state literal (rws only)")
    run.add_argument("--format", choices=("json", "text"), default="json")
    run.set_defaults(fn=cmd_run)

    check = sub.add_parser("check", help="compute obligations and check the contract")
    check.add_argument("file")
    check.add_argument("--post", help="postcondition name declared in the file")
    check.add_argument("--sweep", action="store_true", help="run the builtin program-space sweep instead")
    check.add_argument("--bound", type=int, default=3, help="sweep value-domain size (default 3)")
    check.add_argument("--depth", type=int, default=4, help="sweep program height bound (default 4)")
    check.add_argument("--env", help="environment literal (rws only)")
    check.add_argument("--state", help="starting state literal (rws only)")
    check.add_argument("--format", choices=("json", "text"), default="json")
    check.set_defaults(fn=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
