import pytest

from wp_effects.effect_ast import (
    Ask,
    Bail,
    Bind,
    CaseEither,
    CaseMaybe,
    Gets,
    IfGuards,
    Put,
    Return,
    Tell,
    get,
)
from wp_effects.prelude import Just, Left, Nothing, Right, identity
from wp_effects.semantics import RwsOutcome, run_either, run_rws
from wp_effects.sweep import either_programs, rws_programs

STATES = ({"n": 0}, {"n": 1})


# ---------------------------------------------------------------------------
# Exception-effect run equations


def test_run_return():
    assert run_either(Return(5)) == Right(5)


def test_run_bind_error_short_circuits():
    assert run_either(Bind(Bail("e"), lambda y: Return(y))) == Left("e")


def test_run_bind_success_continues():
    assert run_either(Bind(Return(2), lambda y: Return(y + 1))) == Right(3)


def test_run_bail():
    assert run_either(Bail("e")) == Left("e")


def test_run_if_guards_all_false():
    assert run_either(IfGuards(((False, Return(1)),), Bail("z"))) == Left("z")


def test_run_case_either():
    program = CaseEither(Left("e"), lambda e: Return(len(e)), lambda v: Return(v))
    assert run_either(program) == Right(1)
    program = CaseEither(Right(9), lambda e: Bail(e), lambda v: Return(v + 1))
    assert run_either(program) == Right(10)


def test_run_case_maybe():
    assert run_either(CaseMaybe(Nothing(), Return(0), lambda v: Return(v + 1))) == Right(0)
    assert run_either(CaseMaybe(Just(4), Return(0), lambda v: Return(v + 1))) == Right(5)


def test_error_short_circuit_skips_continuation():
    calls = []

    def cont(v):
        calls.append(v)
        return Return(v)

    assert run_either(Bind(Bail("e"), cont)) == Left("e")
    assert calls == []


# ---------------------------------------------------------------------------
# Reader-writer-state constructor rules


def test_run_rws_return():
    assert run_rws(Return(1), "env", "st") == RwsOutcome(1, "st", ())


def test_run_rws_gets():
    assert run_rws(Gets(lambda s: s["n"]), None, {"n": 4}) == RwsOutcome(4, {"n": 4}, ())


def test_run_rws_put():
    assert run_rws(Put({"n": 9}), None, {"n": 0}) == RwsOutcome(None, {"n": 9}, ())


def test_run_rws_ask():
    assert run_rws(Ask(), "env", "st") == RwsOutcome("env", "st", ())


def test_run_rws_tell():
    assert run_rws(Tell(("w",)), None, "s") == RwsOutcome(None, "s", ("w",))
    assert run_rws(Tell(()), None, "s") == RwsOutcome(None, "s", ())


def test_run_rws_bind_threads_state_and_concatenates():
    program = Bind(Tell(("a",)), lambda _: Tell(("b",)))
    assert run_rws(program, None, "s") == RwsOutcome(None, "s", ("a", "b"))
    program = Bind(Put("s1"), lambda _: get())
    assert run_rws(program, None, "s0") == RwsOutcome("s1", "s1", ())


def test_run_rws_bind_passes_inner_value():
    program = Bind(Gets(lambda s: s["n"]), lambda n: Put({"n": n + 1}))
    assert run_rws(program, None, {"n": 2}) == RwsOutcome(None, {"n": 3}, ())


# ---------------------------------------------------------------------------
# Laws and invariants over the enumerated space


_EITHER_FUNCS = (
    lambda y: Return(y),
    lambda y: Bail("e"),
    lambda y: IfGuards(((isinstance(y, int) and y > 0, Return(y)),), Return(0)),
)

_RWS_FUNCS = (
    lambda y: Return(y),
    lambda y: Tell(("a",)),
    lambda y: Put({"n": 1}),
)


def test_monad_laws_either():
    for a in (-1, 0, 1):
        for f in _EITHER_FUNCS:
            assert run_either(Bind(Return(a), f)) == run_either(f(a))
    programs = list(either_programs(2))
    for m in programs:
        assert run_either(Bind(m, lambda v: Return(v))) == run_either(m)
    for m in programs:
        for f in _EITHER_FUNCS:
            for g in _EITHER_FUNCS:
                lhs = run_either(Bind(Bind(m, f), g))
                rhs = run_either(Bind(m, lambda x: Bind(f(x), g)))
                assert lhs == rhs


def test_monad_laws_rws():
    for st in STATES:
        for a in (0, 1):
            for f in _RWS_FUNCS:
                assert run_rws(Bind(Return(a), f), None, st) == run_rws(f(a), None, st)
        programs = list(rws_programs(2))
        for m in programs:
            assert run_rws(Bind(m, lambda v: Return(v)), None, st) == run_rws(m, None, st)
        for m in programs:
            for f in _RWS_FUNCS:
                for g in _RWS_FUNCS:
                    lhs = run_rws(Bind(Bind(m, f), g), None, st)
                    rhs = run_rws(Bind(m, lambda x: Bind(f(x), g)), None, st)
                    assert lhs == rhs


def test_writer_homomorphism():
    for st in STATES:
        for m in rws_programs(2):
            for f in _RWS_FUNCS:
                first = run_rws(m, None, st)
                second = run_rws(f(first.value), None, first.state)
                combined = run_rws(Bind(m, f), None, st)
                assert combined.outputs == first.outputs + second.outputs


def test_run_deterministic():
    for m in either_programs(2):
        assert run_either(m) == run_either(m)
    for m in rws_programs(2):
        assert run_rws(m, None, {"n": 0}) == run_rws(m, None, {"n": 0})


def test_run_rejects_wrong_effect_nodes():
    with pytest.raises(TypeError):
        run_either(Gets(identity))
    with pytest.raises(TypeError):
        run_rws(Bail("e"), None, "s")
