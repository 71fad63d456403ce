"""Weakest-precondition obligation trees, their evaluator, and the checker
connecting the predicate-transformer reading of a program to its run.

The transformer is syntax directed. Obligations are reified as a tree rather
than collapsed to a boolean so that reports can show branch hypotheses and
the alias introduced at each bind; `eval_obligation` collapses the tree and
produces one leaf record per atom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import effect_ast as ast
from .prelude import Left, Nothing, Right, cond_holds
from .semantics import RwsOutcome, run_either, run_rws

Postcondition = Callable[[Any], bool]

BIND_ALIAS = "c"


# ---------------------------------------------------------------------------
# Obligation trees


@dataclass(frozen=True, eq=False)
class Atom:
    """A postcondition applied to one concrete outcome."""

    post: Postcondition
    outcome: Any
    label: str


@dataclass(frozen=True, eq=False)
class Conj:
    children: tuple


@dataclass(frozen=True, eq=False)
class Implies:
    """Obligation guarded by a concrete hypothesis with a readable description."""

    hypothesis: bool
    description: str
    body: Any


@dataclass(frozen=True, eq=False)
class ForallAlias:
    """Quantification over an alias whose domain is the singleton {forced}.

    The body is only ever evaluated at `forced`; the name is kept so reports
    can present the bound value as a single variable.
    """

    name: str
    forced: Any
    body: Callable[[Any], Any]


Obligation = Atom | Conj | Implies | ForallAlias


# ---------------------------------------------------------------------------
# Weakest preconditions


def wp_either(m: Any, post: Postcondition, label: str = "post") -> Obligation:
    """Obligation tree for `post` to hold of the outcome of running `m`."""
    return _wp_either(m, lambda outcome: Atom(post, outcome, label))


def _wp_either(m: Any, k: Callable[[Any], Obligation]) -> Obligation:
    match m:
        case ast.Return(value=x):
            return k(Right(x))
        case ast.Bail(error=e):
            return k(Left(e))
        case ast.Bind(inner=inner, cont=cont):
            return _wp_either(inner, _bind_post_either(cont, k))
        case ast.IfGuards():
            return _guard_obligation(m, lambda body: _wp_either(body, k))
        case ast.CaseEither():
            return _case_either_obligation(
                m,
                lambda body: _wp_either(body, k),
                lambda f, v: _wp_either(f(v), k),
            )
        case ast.CaseMaybe():
            return _case_maybe_obligation(
                m,
                lambda body: _wp_either(body, k),
                lambda f, v: _wp_either(f(v), k),
            )
        case _:
            raise TypeError(f"not an exception-effect program: {type(m).__name__}")


def _bind_post_either(cont: Callable[[Any], Any], k: Callable[[Any], Obligation]):
    # The postcondition demanded of the first half of a bind: errors flow to
    # the original continuation, successes introduce an alias for the value.
    def bind_post(outcome: Any) -> Obligation:
        if isinstance(outcome, Left):
            return k(outcome)
        y = outcome.value
        return ForallAlias(BIND_ALIAS, y, lambda c: _wp_either(cont(c), k))

    return bind_post


def wp_rws(m: Any, env: Any, st: Any, post: Postcondition, label: str = "post") -> Obligation:
    """Obligation tree for `post` over the (value, post-state, outputs) triple
    of running `m` from `env` and `st`."""
    return _wp_rws(m, env, st, lambda outcome: Atom(post, outcome, label))


def _wp_rws(m: Any, env: Any, st: Any, k: Callable[[RwsOutcome], Obligation]) -> Obligation:
    match m:
        case ast.Return(value=x):
            return k(RwsOutcome(x, st, ()))
        case ast.Gets(projection=g):
            return k(RwsOutcome(g(st), st, ()))
        case ast.Put(state=s2):
            return k(RwsOutcome(None, s2, ()))
        case ast.Ask():
            return k(RwsOutcome(env, st, ()))
        case ast.Tell(outputs=ws):
            return k(RwsOutcome(None, st, tuple(ws)))
        case ast.Bind(inner=inner, cont=cont):

            def after_inner(o1: RwsOutcome) -> Obligation:
                return ForallAlias(
                    BIND_ALIAS,
                    o1.value,
                    lambda c: _wp_rws(
                        cont(c),
                        env,
                        o1.state,
                        lambda o2: k(RwsOutcome(o2.value, o2.state, o1.outputs + o2.outputs)),
                    ),
                )

            return _wp_rws(inner, env, st, after_inner)
        case ast.IfGuards():
            return _guard_obligation(m, lambda body: _wp_rws(body, env, st, k))
        case ast.CaseEither():
            return _case_either_obligation(
                m,
                lambda body: _wp_rws(body, env, st, k),
                lambda f, v: _wp_rws(f(v), env, st, k),
            )
        case ast.CaseMaybe():
            return _case_maybe_obligation(
                m,
                lambda body: _wp_rws(body, env, st, k),
                lambda f, v: _wp_rws(f(v), env, st, k),
            )
        case _:
            raise TypeError(f"not a reader-writer-state program: {type(m).__name__}")


def _guard_obligation(node: ast.IfGuards, rec: Callable[[Any], Obligation]) -> Obligation:
    # One Implies per branch (its condition holds, all earlier ones fail),
    # plus one for the otherwise body with every condition failing.
    holds = [cond_holds(c) for c, _ in node.branches]
    labels = list(node.labels) if node.labels is not None else [f"guard {i}" for i in range(len(holds))]
    children = []
    for i, ((_cond, body), h) in enumerate(zip(node.branches, holds)):
        hyp = h and not any(holds[:i])
        desc = f"{labels[i]} holds" if i == 0 else f"{labels[i]} holds and earlier guards fail"
        children.append(Implies(hyp, desc, rec(body)))
    children.append(Implies(not any(holds), "all guards fail", rec(node.otherwise)))
    return Conj(tuple(children))


def _unreachable(arm: str) -> Atom:
    return Atom(lambda _outcome: True, None, f"unreachable {arm}")


def _case_either_obligation(node: ast.CaseEither, rec, rec_cont) -> Obligation:
    # Both arms are always reported; the arm not matching the concrete
    # scrutinee appears under a false hypothesis and is discharged vacuously.
    s = node.scrutinee
    if isinstance(s, Left):
        return Conj(
            (
                Implies(True, f"scrutinee is Left({s.value!r})", rec_cont(node.on_left, s.value)),
                Implies(False, "scrutinee is Right: not the case", _unreachable("right arm")),
            )
        )
    return Conj(
        (
            Implies(False, "scrutinee is Left: not the case", _unreachable("left arm")),
            Implies(True, f"scrutinee is Right({s.value!r})", rec_cont(node.on_right, s.value)),
        )
    )


def _case_maybe_obligation(node: ast.CaseMaybe, rec, rec_cont) -> Obligation:
    # The nothing arm is a plain program, so it can be reported in full even
    # when it is not the matching arm; the just arm needs the payload.
    s = node.scrutinee
    if isinstance(s, Nothing):
        return Conj(
            (
                Implies(True, "scrutinee is Nothing", rec(node.on_nothing)),
                Implies(False, "scrutinee is Just: not the case", _unreachable("just arm")),
            )
        )
    return Conj(
        (
            Implies(False, "scrutinee is Nothing: not the case", rec(node.on_nothing)),
            Implies(True, f"scrutinee is Just({s.value!r})", rec_cont(node.on_just, s.value)),
        )
    )


# ---------------------------------------------------------------------------
# Obligation evaluation


@dataclass(frozen=True)
class LeafReport:
    path: tuple[str, ...]
    hypotheses: tuple[str, ...]
    status: str  # "pass" | "fail" | "vacuous"


@dataclass(frozen=True)
class EvalResult:
    holds: bool
    leaves: tuple[LeafReport, ...]


def eval_obligation(ob: Obligation) -> EvalResult:
    """Collapse an obligation tree to a verdict plus one record per leaf.

    A leaf under any false hypothesis is vacuous and contributes True; its
    postcondition is not applied. ForallAlias bodies are evaluated only at
    their forced value.
    """
    leaves: list[LeafReport] = []
    holds = _eval(ob, (), (), True, leaves)
    return EvalResult(holds, tuple(leaves))


def _eval(
    ob: Obligation,
    path: tuple[str, ...],
    hyps: tuple[str, ...],
    live: bool,
    leaves: list[LeafReport],
) -> bool:
    match ob:
        case Atom(post=post, outcome=outcome, label=label):
            seg = path + (f"atom[{label}]",)
            if not live:
                leaves.append(LeafReport(seg, hyps, "vacuous"))
                return True
            ok = bool(post(outcome))
            leaves.append(LeafReport(seg, hyps, "pass" if ok else "fail"))
            return ok
        case Conj(children=children):
            result = True
            for i, child in enumerate(children):
                result = _eval(child, path + (f"conj[{i}]",), hyps, live, leaves) and result
            return result
        case Implies(hypothesis=h, description=desc, body=body):
            note = f"{desc} ({'true' if h else 'false'})"
            inner = _eval(body, path + ("implies",), hyps + (note,), live and h, leaves)
            return (not h) or inner
        case ForallAlias(name=name, forced=forced, body=body):
            seg = path + (f"forall[{name}={forced!r}]",)
            return _eval(body(forced), seg, hyps, live, leaves)
        case _:
            raise TypeError(f"not an obligation node: {type(ob).__name__}")


# ---------------------------------------------------------------------------
# Contract checking


@dataclass(frozen=True)
class ContractReport:
    """Outcome of checking the transformer against the interpreter.

    `violation` is the soundness direction: obligations discharged but the
    postcondition false of the actual run. `exact` additionally records
    whether the two verdicts coincide, which this implementation guarantees
    because runs are deterministic and alias domains are singletons.
    """

    kind: str
    discharged: bool
    run_satisfies: bool
    violation: bool
    exact: bool
    leaves: tuple[LeafReport, ...]


def check_contract_either(m: Any, post: Postcondition, label: str = "post") -> ContractReport:
    ev = eval_obligation(wp_either(m, post, label))
    actual = bool(post(run_either(m)))
    return ContractReport(
        kind="either",
        discharged=ev.holds,
        run_satisfies=actual,
        violation=ev.holds and not actual,
        exact=ev.holds == actual,
        leaves=ev.leaves,
    )


def check_contract_rws(m: Any, env: Any, st: Any, post: Postcondition, label: str = "post") -> ContractReport:
    ev = eval_obligation(wp_rws(m, env, st, post, label))
    actual = bool(post(run_rws(m, env, st)))
    return ContractReport(
        kind="rws",
        discharged=ev.holds,
        run_satisfies=actual,
        violation=ev.holds and not actual,
        exact=ev.holds == actual,
        leaves=ev.leaves,
    )
