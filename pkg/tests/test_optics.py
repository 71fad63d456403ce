import hypothesis.strategies as strat
from hypothesis import given

from wp_effects.effect_ast import Bind, Gets, Put
from wp_effects.optics import assign, compose, field, field_path, identity_lens, mk_lens, modifying, use
from wp_effects.prelude import Just, Nothing
from wp_effects.semantics import RwsOutcome, run_rws


def records():
    leaf = strat.integers(-100, 100)
    return strat.fixed_dictionaries(
        {
            "a": strat.fixed_dictionaries({"b": leaf, "c": leaf}),
            "k": leaf,
        }
    )


def assert_laws(lens, s, v1, v2):
    assert lens.set(s, lens.get(s)) == s  # GetSet
    assert lens.get(lens.set(s, v1)) == v1  # SetGet
    assert lens.set(lens.set(s, v1), v2) == lens.set(s, v2)  # SetSet


def test_mk_lens_examples():
    lens = mk_lens(lambda s: s["k"], lambda s, v: {**s, "k": v})
    assert lens.get({"k": 0}) == 0
    assert lens.set({"k": 0}, 7) == {"k": 7}


def test_identity_lens_laws():
    assert_laws(identity_lens, {"k": 0}, {"k": 1}, {"k": 2})
    assert identity_lens.get(5) == 5
    assert identity_lens.set(5, 9) == 9


def test_compose_examples():
    ab = compose(field("a"), field("b"))
    assert ab.get({"a": {"b": 3}}) == 3
    assert ab.set({"a": {"b": 3}}, 9) == {"a": {"b": 9}}


@given(records(), strat.integers(), strat.integers())
def test_field_lens_laws(s, v1, v2):
    assert_laws(field("k"), s, v1, v2)


@given(records(), strat.integers(), strat.integers())
def test_composed_lens_laws(s, v1, v2):
    assert_laws(compose(field("a"), field("b")), s, v1, v2)
    assert_laws(field_path("a", "c"), s, v1, v2)


@given(records(), strat.integers())
def test_compose_with_identity_is_identity(s, v):
    lens = field("k")
    left = compose(lens, identity_lens)
    right = compose(identity_lens, lens)
    assert left.get(s) == lens.get(s) == right.get(s)
    assert left.set(s, v) == lens.set(s, v) == right.set(s, v)


@given(strat.integers(), strat.integers())
def test_compose_associative(v, w):
    s = {"a": {"b": {"c": 0}}}
    lhs = compose(compose(field("a"), field("b")), field("c"))
    rhs = compose(field("a"), compose(field("b"), field("c")))
    assert lhs.get(s) == rhs.get(s)
    assert lhs.set(s, v) == rhs.set(s, v)
    assert lhs.set(lhs.set(s, v), w) == rhs.set(rhs.set(s, v), w)


def test_field_set_copies():
    s = {"k": 0}
    assert field("k").set(s, 1) == {"k": 1}
    assert s == {"k": 0}


# ---------------------------------------------------------------------------
# State-effect integration


def test_use_is_gets_of_lens_get():
    lens = field("k")
    node = use(lens)
    assert isinstance(node, Gets)
    assert node.projection is lens.get
    assert run_rws(node, None, {"k": 3}) == RwsOutcome(3, {"k": 3}, ())


def test_assign_sets_nested_field():
    vote_sent = field_path("round-state", "vote-sent")
    s = {"round-state": {"vote-sent": Nothing()}, "epoch": 2}
    outcome = run_rws(assign(vote_sent, Just(7)), None, s)
    assert outcome == RwsOutcome(None, {"round-state": {"vote-sent": Just(7)}, "epoch": 2}, ())


def test_assign_structure_uses_get_and_put():
    node = assign(field("k"), 1)
    assert isinstance(node, Bind)
    assert isinstance(node.inner, Gets)
    assert isinstance(node.cont({"k": 0}), Put)


def test_assign_then_use_round_trip():
    lens = field("k")
    program = Bind(assign(lens, 1), lambda _: use(lens))
    outcome = run_rws(program, None, {"k": 0, "x": 9})
    assert outcome.value == 1
    assert lens.get(outcome.state) == 1
    assert outcome.outputs == ()


def test_modifying_applies_function():
    lens = field_path("a", "b")
    outcome = run_rws(modifying(lens, lambda n: n + 10), None, {"a": {"b": 5}})
    assert outcome == RwsOutcome(None, {"a": {"b": 15}}, ())
