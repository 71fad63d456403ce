"""Bounded-exhaustive program spaces, fixed predicate pools, and contract
sweeps over (program, predicate) cases.

Enumeration is exhaustive over node shapes up to a height bound (a leaf has
height 1). Continuation slots draw from small fixed pools, since
continuations are host functions and cannot themselves be enumerated; the
pools keep every constructor, both guard polarities, and value-dependent
branching in play at every height.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator

from . import effect_ast as ast
from .prelude import Just, Left, Nothing, Right
from .semantics import run_either, run_rws
from .wp import eval_obligation, wp_either, wp_rws

DEFAULT_VALUES = (-1, 0, 1)
DEFAULT_ERRORS = ("e",)
DEFAULT_STATE_FIELD = "n"
DEFAULT_FIELD_VALUES = (0, 1)
DEFAULT_OUTPUTS = ("a", "b")
DEFAULT_CASE_CAP = 1_000_000


# ---------------------------------------------------------------------------
# Predicate pools


@dataclass(frozen=True)
class Predicate:
    name: str
    fn: Callable[[Any], bool]

    def __call__(self, outcome: Any) -> bool:
        return bool(self.fn(outcome))


def either_predicate_pool(values: tuple = DEFAULT_VALUES) -> tuple[Predicate, ...]:
    """is-left, is-right, and value-equals-k for each k in the value domain."""
    pool = [
        Predicate("is-left", lambda o: isinstance(o, Left)),
        Predicate("is-right", lambda o: isinstance(o, Right)),
    ]
    for k in values:
        pool.append(Predicate(f"value-equals-{k}", lambda o, k=k: isinstance(o, Right) and o.value == k))
    return tuple(pool)


def rws_predicate_pool(
    values: tuple = DEFAULT_FIELD_VALUES,
    state_field: str = DEFAULT_STATE_FIELD,
    field_values: tuple = DEFAULT_FIELD_VALUES,
    max_output_len: int = 3,
) -> tuple[Predicate, ...]:
    """value-equals-k, state-field-equals-k, and outputs-length-equals-n."""
    pool = [Predicate(f"value-equals-{k}", lambda o, k=k: o.value == k) for k in values]
    pool.extend(
        Predicate(
            f"state-{state_field}-equals-{k}",
            lambda o, k=k, f=state_field: isinstance(o.state, dict) and o.state.get(f) == k,
        )
        for k in field_values
    )
    pool.extend(
        Predicate(f"outputs-length-equals-{n}", lambda o, n=n: len(o.outputs) == n)
        for n in range(max_output_len + 1)
    )
    return tuple(pool)


# ---------------------------------------------------------------------------
# Program enumeration


def _const(m: Any) -> Callable[[Any], Any]:
    return lambda _v, m=m: m


def _either_conts(errors: tuple) -> tuple:
    err = errors[0]
    return (
        lambda y: ast.Return(y),
        lambda y: ast.Return(-y),
        lambda _y: ast.Bail(err),
        lambda y: ast.IfGuards(((isinstance(y, int) and y > 0, ast.Return(y)),), ast.Bail(err)),
    )


def either_programs(
    max_height: int,
    values: tuple = DEFAULT_VALUES,
    errors: tuple = DEFAULT_ERRORS,
) -> Iterator[Any]:
    """Yield every exception-effect program of height <= max_height over the
    given value and error domains."""
    err = errors[0]
    mid = values[len(values) // 2]
    conts = _either_conts(errors)
    level: list = [ast.Return(v) for v in values] + [ast.Bail(e) for e in errors]
    yield from level
    height = 1
    while height < max_height:
        nxt: list = []
        for m in level:
            for f in conts:
                nxt.append(ast.Bind(m, f))
            nxt.append(ast.Bind(ast.Return(mid), _const(m)))
            nxt.append(ast.IfGuards(((True, m),), ast.Bail(err)))
            nxt.append(ast.IfGuards(((False, ast.Return(mid)),), m))
            nxt.append(ast.CaseMaybe(Just(mid), ast.Bail(err), _const(m)))
            nxt.append(ast.CaseEither(Left(err), _const(m), lambda y: ast.Return(y)))
        if height == 1:
            nxt.extend(_either_fixed_families(values, errors, conts))
        yield from nxt
        level = nxt
        height += 1


def _either_fixed_families(values: tuple, errors: tuple, conts: tuple) -> list:
    # Height-2 programs covering every scrutinee/arm combination and the
    # multi-branch and zero-branch guard shapes.
    err = errors[0]
    mid = values[len(values) // 2]
    out: list = []
    maybe_scruts = [Nothing()] + [Just(v) for v in values]
    for s in maybe_scruts:
        for nothing_arm in (ast.Return(mid), ast.Bail(err)):
            for f in conts:
                out.append(ast.CaseMaybe(s, nothing_arm, f))
    either_scruts = [Left(e) for e in errors] + [Right(v) for v in values]
    left_arms = (lambda e: ast.Bail(e), lambda _e: ast.Return(mid))
    for s in either_scruts:
        for fl in left_arms:
            for fr in conts:
                out.append(ast.CaseEither(s, fl, fr))
    for c0 in (False, True):
        for c1 in (False, True):
            out.append(
                ast.IfGuards(
                    ((c0, ast.Return(values[0])), (c1, ast.Return(values[-1]))),
                    ast.Bail(err),
                )
            )
    for v in values:
        out.append(ast.IfGuards((), ast.Return(v)))
    out.append(ast.IfGuards((), ast.Bail(err)))
    return out


def _rws_conts(state_field: str, field_values: tuple, outputs: tuple) -> tuple:
    return (
        lambda y: ast.Return(y),
        lambda _y: ast.Tell((outputs[0],)),
        lambda _y: ast.Put({state_field: field_values[-1]}),
        lambda y: ast.IfGuards(
            ((isinstance(y, int) and y > 0, ast.Return(y)),),
            ast.Tell((outputs[-1],)),
        ),
    )


def rws_programs(
    max_height: int,
    values: tuple = DEFAULT_FIELD_VALUES,
    state_field: str = DEFAULT_STATE_FIELD,
    field_values: tuple = DEFAULT_FIELD_VALUES,
    outputs: tuple = DEFAULT_OUTPUTS,
) -> Iterator[Any]:
    """Yield every reader-writer-state program of height <= max_height over
    one-field record states and the given output alphabet."""
    conts = _rws_conts(state_field, field_values, outputs)
    mid = values[len(values) // 2]
    level: list = [ast.Return(v) for v in values]
    level.append(ast.Gets(lambda s: s[state_field]))
    level.append(ast.Gets(lambda s: s))
    level.extend(ast.Put({state_field: v}) for v in field_values)
    level.append(ast.Ask())
    level.append(ast.Tell(()))
    level.extend(ast.Tell((w,)) for w in outputs)
    level.append(ast.Tell(tuple(outputs)))
    yield from level
    height = 1
    while height < max_height:
        nxt: list = []
        for m in level:
            for f in conts:
                nxt.append(ast.Bind(m, f))
            nxt.append(ast.Bind(ast.Return(mid), _const(m)))
            nxt.append(ast.IfGuards(((True, m),), ast.Tell((outputs[0],))))
            nxt.append(ast.IfGuards(((False, ast.Return(mid)),), m))
            nxt.append(ast.CaseMaybe(Just(mid), ast.Tell((outputs[-1],)), _const(m)))
            nxt.append(ast.CaseEither(Left(mid), _const(m), lambda y: ast.Return(y)))
        if height == 1:
            nxt.extend(_rws_fixed_families(values, state_field, field_values, outputs, conts))
        yield from nxt
        level = nxt
        height += 1


def _rws_fixed_families(values, state_field, field_values, outputs, conts) -> list:
    mid = values[len(values) // 2]
    out: list = []
    maybe_scruts = [Nothing()] + [Just(v) for v in values]
    for s in maybe_scruts:
        for nothing_arm in (ast.Return(mid), ast.Tell((outputs[0],))):
            for f in conts:
                out.append(ast.CaseMaybe(s, nothing_arm, f))
    either_scruts = [Left(mid)] + [Right(v) for v in values]
    left_arms = (lambda e: ast.Return(e), lambda _e: ast.Tell((outputs[-1],)))
    for s in either_scruts:
        for fl in left_arms:
            for fr in conts:
                out.append(ast.CaseEither(s, fl, fr))
    for c0 in (False, True):
        for c1 in (False, True):
            out.append(
                ast.IfGuards(
                    ((c0, ast.Put({state_field: field_values[0]})), (c1, ast.Tell((outputs[0],)))),
                    ast.Return(mid),
                )
            )
    out.append(ast.IfGuards((), ast.Ask()))
    return out


# ---------------------------------------------------------------------------
# Contract sweeps


@dataclass(frozen=True)
class SweepViolation:
    case_index: int
    predicate: str
    discharged: bool
    run_satisfies: bool


@dataclass(frozen=True)
class SweepResult:
    cases: int
    violations: tuple[SweepViolation, ...]
    exact: bool
    truncated: bool


def sweep_either_contract(
    max_height: int = 4,
    values: tuple = DEFAULT_VALUES,
    errors: tuple = DEFAULT_ERRORS,
    predicates: tuple | None = None,
    cap: int = DEFAULT_CASE_CAP,
) -> SweepResult:
    """Check the contract on every (program, predicate) case in the space.

    A violation is a case where the obligations evaluate true but the
    postcondition is false of the actual run.
    """
    preds = either_predicate_pool(values) if predicates is None else tuple(predicates)
    idx = 0
    violations: list[SweepViolation] = []
    exact = True
    for m in either_programs(max_height, values, errors):
        outcome = run_either(m)
        for p in preds:
            if idx >= cap:
                return SweepResult(idx, tuple(violations), exact, True)
            discharged = eval_obligation(wp_either(m, p, p.name)).holds
            actual = p(outcome)
            if discharged != actual:
                exact = False
            if discharged and not actual:
                violations.append(SweepViolation(idx, p.name, discharged, actual))
            idx += 1
    return SweepResult(idx, tuple(violations), exact, False)


def sweep_rws_contract(
    max_height: int = 3,
    values: tuple = DEFAULT_FIELD_VALUES,
    state_field: str = DEFAULT_STATE_FIELD,
    field_values: tuple = DEFAULT_FIELD_VALUES,
    outputs: tuple = DEFAULT_OUTPUTS,
    env: Any = None,
    predicates: tuple | None = None,
    cap: int = DEFAULT_CASE_CAP,
) -> SweepResult:
    """Contract sweep over (program, start state, predicate) cases."""
    preds = (
        rws_predicate_pool(values, state_field, field_values)
        if predicates is None
        else tuple(predicates)
    )
    states = [{state_field: v} for v in field_values]
    idx = 0
    violations: list[SweepViolation] = []
    exact = True
    for m in rws_programs(max_height, values, state_field, field_values, outputs):
        for st in states:
            outcome = run_rws(m, env, st)
            for p in preds:
                if idx >= cap:
                    return SweepResult(idx, tuple(violations), exact, True)
                discharged = eval_obligation(wp_rws(m, env, st, p, p.name)).holds
                actual = p(outcome)
                if discharged != actual:
                    exact = False
                if discharged and not actual:
                    violations.append(SweepViolation(idx, p.name, discharged, actual))
                idx += 1
    return SweepResult(idx, tuple(violations), exact, False)
