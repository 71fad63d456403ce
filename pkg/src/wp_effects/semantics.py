"""Operational semantics: deterministic interpreters for both program kinds."""

from __future__ import annotations

from typing import Any, NamedTuple

from . import effect_ast as ast
from .prelude import Left, Nothing, Right, eval_guards

EitherOutcome = Left | Right


class RwsOutcome(NamedTuple):
    value: Any
    state: Any
    outputs: tuple


def run_either(m: Any) -> EitherOutcome:
    """Run an exception-effect program to a Left (error) or Right (result)."""
    match m:
        case ast.Return(value=x):
            return Right(x)
        case ast.Bail(error=e):
            return Left(e)
        case ast.Bind(inner=inner, cont=cont):
            first = run_either(inner)
            if isinstance(first, Left):
                return first
            return run_either(cont(first.value))
        case ast.IfGuards():
            return run_either(eval_guards(m))
        case ast.CaseEither(scrutinee=s, on_left=on_left, on_right=on_right):
            body = on_left(s.value) if isinstance(s, Left) else on_right(s.value)
            return run_either(body)
        case ast.CaseMaybe(scrutinee=s, on_nothing=on_nothing, on_just=on_just):
            body = on_nothing if isinstance(s, Nothing) else on_just(s.value)
            return run_either(body)
        case _:
            raise TypeError(f"not an exception-effect program: {type(m).__name__}")


def run_rws(m: Any, env: Any, st: Any) -> RwsOutcome:
    """Run a reader-writer-state program from `env` and `st`.

    Returns the result value, the final state, and the concatenation, in
    program order, of every Tell payload executed. The unit value is None.
    """
    match m:
        case ast.Return(value=x):
            return RwsOutcome(x, st, ())
        case ast.Gets(projection=g):
            return RwsOutcome(g(st), st, ())
        case ast.Put(state=s2):
            return RwsOutcome(None, s2, ())
        case ast.Ask():
            return RwsOutcome(env, st, ())
        case ast.Tell(outputs=ws):
            return RwsOutcome(None, st, tuple(ws))
        case ast.Bind(inner=inner, cont=cont):
            first = run_rws(inner, env, st)
            second = run_rws(cont(first.value), env, first.state)
            return RwsOutcome(second.value, second.state, first.outputs + second.outputs)
        case ast.IfGuards():
            return run_rws(eval_guards(m), env, st)
        case ast.CaseEither(scrutinee=s, on_left=on_left, on_right=on_right):
            body = on_left(s.value) if isinstance(s, Left) else on_right(s.value)
            return run_rws(body, env, st)
        case ast.CaseMaybe(scrutinee=s, on_nothing=on_nothing, on_just=on_just):
            body = on_nothing if isinstance(s, Nothing) else on_just(s.value)
            return run_rws(body, env, st)
        case _:
            raise TypeError(f"not a reader-writer-state program: {type(m).__name__}")
