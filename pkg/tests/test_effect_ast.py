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
    ap,
    fmap,
    get,
    modify,
)
from wp_effects.prelude import Just, Left, Nothing, Right, identity
from wp_effects.semantics import RwsOutcome, run_either, run_rws
from wp_effects.sweep import either_programs, rws_programs


# ---------------------------------------------------------------------------
# Construction


def test_construct_return():
    node = Return(5)
    assert node.value == 5


def test_construct_bail():
    node = Bail("err")
    assert node.error == "err"


def test_if_guards_requires_otherwise():
    with pytest.raises(TypeError):
        IfGuards(branches=[])  # otherwise missing entirely
    with pytest.raises(TypeError):
        IfGuards((), None)  # not a program


def test_if_guards_normalizes_branches():
    node = IfGuards([(True, Return(1)), [False, Return(2)]], Return(0))
    assert isinstance(node.branches, tuple)
    assert all(isinstance(b, tuple) and len(b) == 2 for b in node.branches)
    assert node.branches[0][0] is True and node.branches[1][0] is False


def test_if_guards_rejects_bad_conditions_and_labels():
    with pytest.raises(TypeError):
        IfGuards(((1, Return(0)),), Return(0))
    with pytest.raises(ValueError):
        IfGuards(((True, Return(0)),), Return(0), labels=("a", "b"))


def test_tell_payload_must_be_sequence():
    with pytest.raises(TypeError):
        Tell("ab")
    with pytest.raises(TypeError):
        Tell(7)
    assert Tell(["a", "b"]).outputs == ("a", "b")
    assert Tell(()).outputs == ()


def test_case_scrutinee_validation():
    with pytest.raises(TypeError):
        CaseEither(5, lambda e: Return(0), lambda v: Return(v))
    with pytest.raises(TypeError):
        CaseMaybe(5, Return(0), lambda v: Return(v))
    with pytest.raises(TypeError):
        CaseMaybe(Just(1), Return(0), "not callable")


def test_bind_validation():
    with pytest.raises(TypeError):
        Bind(Return(1), "not callable")
    with pytest.raises(TypeError):
        Bind("not a program", lambda v: Return(v))


# ---------------------------------------------------------------------------
# fmap / ap / modify


def test_fmap_structure():
    m = Return(2)
    node = fmap(m, lambda x: x + 1)
    assert isinstance(node, Bind)
    assert node.inner is m
    produced = node.cont(2)
    assert isinstance(produced, Return)
    assert produced.value == 3


def test_fmap_run_examples():
    assert run_either(fmap(Return(2), lambda x: x + 1)) == Right(3)
    assert run_either(fmap(Bail("e"), lambda x: x + 1)) == Left("e")
    assert run_rws(fmap(Tell(("w",)), identity), None, "s") == RwsOutcome(None, "s", ("w",))


def test_ap_structure():
    node = ap(Return(identity), Return(2))
    assert isinstance(node, Bind)
    inner = node.cont(identity)
    assert isinstance(inner, Bind)
    assert isinstance(inner.cont(2), Return)


def test_ap_run_examples():
    assert run_either(ap(Return(lambda x: x + 1), Return(2))) == Right(3)
    assert run_either(ap(Bail("e"), Return(2))) == Left("e")


def test_ap_rws_pairs_state_with_argument():
    pair_maker = lambda a: lambda b: (a, b)
    program = ap(fmap(get(), pair_maker), Return(7))
    assert run_rws(program, None, "s0") == RwsOutcome(("s0", 7), "s0", ())


def test_ap_left_to_right_effect_order():
    order = []

    def noting(name, result):
        def g(s):
            order.append(name)
            return result

        return g

    program = ap(fmap(Gets(noting("first", lambda b: b)), lambda f: f), Gets(noting("second", 1)))
    run_rws(program, None, "s")
    assert order == ["first", "second"]


def test_modify_structure_and_runs():
    node = modify(identity)
    assert isinstance(node, Bind)
    assert isinstance(node.inner, Gets)
    assert isinstance(node.cont("s"), Put)
    assert run_rws(modify(identity), None, "s") == RwsOutcome(None, "s", ())
    assert run_rws(modify(lambda s: {**s, "k": 1}), None, {"k": 0}) == RwsOutcome(None, {"k": 1}, ())


def test_modify_composition():
    f = lambda s: s + 1
    g = lambda s: s * 2
    program = Bind(modify(f), lambda _: modify(g))
    assert run_rws(program, None, 3) == RwsOutcome(None, g(f(3)), ())


def test_get_is_gets_identity():
    node = get()
    assert isinstance(node, Gets)
    assert node.projection is identity


# ---------------------------------------------------------------------------
# Invariants


def test_if_guards_totality_first_true_wins():
    from itertools import product

    for n in range(0, 6):
        for conds in product([False, True], repeat=n):
            node = IfGuards(
                tuple((c, Return(i)) for i, c in enumerate(conds)),
                Return(-1),
            )
            expected = next((i for i, c in enumerate(conds) if c), -1)
            assert run_either(node) == Right(expected)


def test_fmap_definitional_property_either():
    g = lambda x: (x, x)
    for m in either_programs(2):
        outcome = run_either(m)
        mapped = run_either(fmap(m, g))
        if isinstance(outcome, Left):
            assert mapped == outcome
        else:
            assert mapped == Right(g(outcome.value))


def test_fmap_definitional_property_rws():
    g = lambda x: (x, x)
    st = {"n": 0}
    for m in rws_programs(2):
        outcome = run_rws(m, None, st)
        mapped = run_rws(fmap(m, g), None, st)
        assert mapped == RwsOutcome(g(outcome.value), outcome.state, outcome.outputs)


def test_construction_never_evaluates():
    reads = []
    cond_calls = []
    cont_calls = []

    def projection(s):
        reads.append(s)
        return s

    def condition():
        cond_calls.append(True)
        return True

    def cont(v):
        cont_calls.append(v)
        return Return(v)

    Bind(Gets(projection), cont)
    IfGuards(((condition, Return(1)),), Bail("e"))
    CaseMaybe(Just(1), Return(0), cont)
    CaseEither(Right(1), cont, cont)
    Tell(("w",))
    Put({"n": 1})
    Ask()
    assert reads == [] and cond_calls == [] and cont_calls == []
