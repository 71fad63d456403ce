from dataclasses import dataclass
from itertools import product

import hypothesis.strategies as strat
import pytest
from hypothesis import given

from wp_effects.prelude import (
    EQ,
    GT,
    LT,
    GuardChain,
    Just,
    Left,
    No,
    Nothing,
    Right,
    Yes,
    compare_ev,
    dec_eq,
    either,
    eq,
    eval_guards,
    from_maybe,
    is_just,
    is_left,
    is_nothing,
    is_right,
    list_bind,
    list_return,
    maybe,
    neq,
)


@dataclass(frozen=True)
class Status:
    name: str


# ---------------------------------------------------------------------------
# Maybe / Either helpers


def test_maybe_helpers():
    assert is_nothing(Nothing()) and not is_nothing(Just(1))
    assert is_just(Just(1)) and not is_just(Nothing())
    assert from_maybe(0, Just(7)) == 7
    assert from_maybe(0, Nothing()) == 0
    assert maybe(0, lambda x: x + 1, Just(7)) == 8
    assert maybe(0, lambda x: x + 1, Nothing()) == 0


def test_either_helpers():
    assert is_left(Left("e")) and not is_left(Right(1))
    assert is_right(Right(1)) and not is_right(Left("e"))
    assert either(len, lambda x: x + 1, Left("err")) == 3
    assert either(len, lambda x: x + 1, Right(1)) == 2


# ---------------------------------------------------------------------------
# Decidable equality


def test_dec_eq_yes_carries_value():
    result = dec_eq(3, 3)
    assert isinstance(result, Yes)
    assert result.value == 3


def test_dec_eq_record_witness():
    result = dec_eq({"k": 1}, {"k": 2})
    assert isinstance(result, No)
    assert result.witness == "field k: 1 ≠ 2"


def test_dec_eq_tag_values():
    assert neq(Status("Succeeded"), Status("IdNotFound"))
    assert eq(Status("Succeeded"), Status("Succeeded"))


def test_dec_eq_strict_types():
    assert isinstance(dec_eq(True, 1), No)
    assert isinstance(dec_eq((1, 2), [1, 2]), No)


def test_dec_eq_nested_witnesses():
    assert "index 1" in dec_eq((1, 2), (1, 3)).witness
    assert "length" in dec_eq([1], [1, 2]).witness
    assert "field k, index 0" in dec_eq({"k": [Just(1)]}, {"k": [Just(2)]}).witness
    assert "absent" in dec_eq({"a": 1}, {"a": 1, "b": 2}).witness


def _values(depth: int):
    scalar = strat.one_of(
        strat.integers(-3, 3),
        strat.booleans(),
        strat.sampled_from(["a", "b", ""]),
        strat.none(),
    )
    if depth == 0:
        return scalar
    sub = _values(depth - 1)
    return strat.one_of(
        scalar,
        strat.lists(sub, max_size=3).map(tuple),
        strat.dictionaries(strat.sampled_from("xyz"), sub, max_size=3),
        sub.map(Just),
        strat.just(Nothing()),
        sub.map(Left),
        sub.map(Right),
    )


def _structurally_equal(a, b) -> bool:
    # Independent oracle for dec_eq: strict types, recursive descent.
    if type(a) is not type(b):
        return False
    if isinstance(a, dict):
        return a.keys() == b.keys() and all(_structurally_equal(a[k], b[k]) for k in a)
    if isinstance(a, (list, tuple)):
        return len(a) == len(b) and all(_structurally_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, (Just, Left, Right)):
        return _structurally_equal(a.value, b.value)
    if isinstance(a, Nothing):
        return True
    return a == b


@given(_values(2), _values(2))
def test_dec_eq_matches_structural_oracle(a, b):
    assert isinstance(dec_eq(a, b), Yes) == _structurally_equal(a, b)


@given(_values(2))
def test_dec_eq_reflexive(a):
    assert isinstance(dec_eq(a, a), Yes)


# ---------------------------------------------------------------------------
# Comparison


def test_compare_examples():
    assert compare_ev(1, 2) == LT(1, 2)
    assert compare_ev(2, 2) == EQ(2, 2)
    assert compare_ev("b", "a") == GT("b", "a")
    assert isinstance(compare_ev((1, "a"), (1, "b")), LT)
    assert isinstance(compare_ev((1,), (1, 2)), LT)


def test_compare_rejects_unordered():
    with pytest.raises(TypeError):
        compare_ev(True, False)
    with pytest.raises(TypeError):
        compare_ev(Just(1), Just(2))
    with pytest.raises(TypeError):
        compare_ev(1, "a")


_ordered = strat.one_of(
    strat.integers(-10, 10),
    strat.text(alphabet="abc", max_size=3),
    strat.tuples(strat.integers(-3, 3), strat.integers(-3, 3)),
)


@given(_ordered)
def test_compare_reflexive(x):
    assert isinstance(compare_ev(x, x), EQ)


@given(strat.integers(-10, 10), strat.integers(-10, 10))
def test_compare_antisymmetric(a, b):
    ev = compare_ev(a, b)
    flipped = compare_ev(b, a)
    if isinstance(ev, LT):
        assert isinstance(flipped, GT)
    elif isinstance(ev, GT):
        assert isinstance(flipped, LT)
    else:
        assert isinstance(flipped, EQ)


@given(strat.integers(-5, 5), strat.integers(-5, 5), strat.integers(-5, 5))
def test_compare_transitive(a, b, c):
    if isinstance(compare_ev(a, b), LT) and isinstance(compare_ev(b, c), LT):
        assert isinstance(compare_ev(a, c), LT)


@given(_ordered, _ordered)
def test_compare_eq_coincides_with_dec_eq(a, b):
    if type(a) is not type(b):
        return
    assert isinstance(compare_ev(a, b), EQ) == isinstance(dec_eq(a, b), Yes)


def test_compare_carries_operands():
    ev = compare_ev(1, 2)
    assert (ev.first, ev.second) == (1, 2)


# ---------------------------------------------------------------------------
# Guard chains


def test_guards_otherwise_fallback():
    assert eval_guards(GuardChain(((False, "a"),), "b")) == "b"


def test_guards_first_true_wins():
    assert eval_guards(GuardChain(((True, "a"), (True, "b")), "c")) == "a"


def test_guards_verify_shape():
    # status mismatch selects the bail result; otherwise the fallthrough
    def chain(status):
        return GuardChain(
            ((neq(status, Status("Succeeded")), ("bail", "bad status")),),
            ("verify-blocks",),
        )

    assert eval_guards(chain(Status("IdNotFound"))) == ("bail", "bad status")
    assert eval_guards(chain(Status("Succeeded"))) == ("verify-blocks",)


def test_guards_deferred_conditions_lazy():
    calls = []

    def tracked(name, value):
        def cond():
            calls.append(name)
            return value

        return cond

    chain = GuardChain(((tracked("a", True), 1), (tracked("b", True), 2)), 3)
    assert eval_guards(chain) == 1
    assert calls == ["a"]


def test_guards_against_brute_force_scan():
    for n in range(0, 6):
        for conds in product([False, True], repeat=n):
            chain = GuardChain(tuple((c, i) for i, c in enumerate(conds)), "z")
            expected = next((i for i, c in enumerate(conds) if c), "z")
            assert eval_guards(chain) == expected


def test_guard_chain_validation():
    with pytest.raises(TypeError):
        GuardChain(((1, "a"),), "b")  # int condition
    with pytest.raises(ValueError):
        GuardChain((("just-one",),), "b")
    with pytest.raises(TypeError):
        GuardChain(((True, "a"),))  # missing otherwise


# ---------------------------------------------------------------------------
# List monad


def test_list_bind_examples():
    assert list_bind([], lambda x: [x]) == []
    assert list_bind([1, 2], lambda x: [x, x]) == [1, 1, 2, 2]


def test_list_monad_laws_small_domain():
    domain = [0, 1, 2]
    seqs = [list(s) for n in range(0, 4) for s in product(domain, repeat=n)]
    funcs = [
        list_return,
        lambda x: [],
        lambda x: [x, x],
        lambda x: [x + 1],
        lambda x: domain,
    ]
    for f in funcs:
        for a in domain:
            assert list_bind(list_return(a), f) == f(a)
    for xs in seqs:
        assert list_bind(xs, list_return) == xs
    for xs in seqs:
        for f in funcs:
            for g in funcs:
                lhs = list_bind(list_bind(xs, f), g)
                rhs = list_bind(xs, lambda x: list_bind(f(x), g))
                assert lhs == rhs
