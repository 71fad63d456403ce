"""Small Haskell-flavored prelude: Maybe/Either values, evidence-carrying
equality and ordering, guard chains, and the list monad."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Callable


def identity(x: Any) -> Any:
    return x


# ---------------------------------------------------------------------------
# Maybe / Either values


@dataclass(frozen=True)
class Nothing:
    pass


@dataclass(frozen=True)
class Just:
    value: Any


@dataclass(frozen=True)
class Left:
    value: Any


@dataclass(frozen=True)
class Right:
    value: Any


def is_nothing(m: Any) -> bool:
    return isinstance(m, Nothing)


def is_just(m: Any) -> bool:
    return isinstance(m, Just)


def is_left(e: Any) -> bool:
    return isinstance(e, Left)


def is_right(e: Any) -> bool:
    return isinstance(e, Right)


def from_maybe(default: Any, m: Any) -> Any:
    return m.value if isinstance(m, Just) else default


def maybe(default: Any, f: Callable[[Any], Any], m: Any) -> Any:
    return f(m.value) if isinstance(m, Just) else default


def either(on_left: Callable[[Any], Any], on_right: Callable[[Any], Any], e: Any) -> Any:
    return on_left(e.value) if isinstance(e, Left) else on_right(e.value)


# ---------------------------------------------------------------------------
# Decidable equality with evidence


@dataclass(frozen=True)
class Yes:
    """The inputs are equal; carries the shared value as witness."""

    value: Any


@dataclass(frozen=True)
class No:
    """The inputs differ; carries a distinguishing observation."""

    witness: str


DecEqResult = Yes | No


def dec_eq(a: Any, b: Any) -> DecEqResult:
    """Decide structural equality of two values, with evidence either way.

    Supports the value universe used throughout: ints, bools, strings, None,
    tuples/lists, dicts (records), and frozen dataclasses such as Just/Left.
    Types are compared strictly, so True and 1 are not equal here.
    """
    witness = _distinguish(a, b, "")
    return Yes(a) if witness is None else No(witness)


def eq(a: Any, b: Any) -> bool:
    return isinstance(dec_eq(a, b), Yes)


def neq(a: Any, b: Any) -> bool:
    return not eq(a, b)


def _leaf(path: str, lhs: str, rhs: str) -> str:
    return f"{path}: {lhs} ≠ {rhs}" if path else f"{lhs} ≠ {rhs}"


def _extend(path: str, segment: str) -> str:
    return f"{path}, {segment}" if path else segment


def _distinguish(a: Any, b: Any, path: str) -> str | None:
    if type(a) is not type(b):
        return _leaf(path, f"type {type(a).__name__}", f"type {type(b).__name__}")
    if isinstance(a, dict):
        for k in a:
            if k not in b:
                return _leaf(_extend(path, f"field {k}"), "present", "absent")
        for k in b:
            if k not in a:
                return _leaf(_extend(path, f"field {k}"), "absent", "present")
        for k in a:
            w = _distinguish(a[k], b[k], _extend(path, f"field {k}"))
            if w is not None:
                return w
        return None
    if isinstance(a, (list, tuple)):
        if len(a) != len(b):
            return _leaf(path, f"length {len(a)}", f"length {len(b)}")
        for i, (x, y) in enumerate(zip(a, b)):
            w = _distinguish(x, y, _extend(path, f"index {i}"))
            if w is not None:
                return w
        return None
    if dataclasses.is_dataclass(a) and not isinstance(a, type):
        for f in dataclasses.fields(a):
            w = _distinguish(getattr(a, f.name), getattr(b, f.name), _extend(path, f"field {f.name}"))
            if w is not None:
                return w
        return None
    return None if a == b else _leaf(path, repr(a), repr(b))


# ---------------------------------------------------------------------------
# Trichotomous comparison with evidence


@dataclass(frozen=True)
class LT:
    first: Any
    second: Any


@dataclass(frozen=True)
class EQ:
    first: Any
    second: Any


@dataclass(frozen=True)
class GT:
    first: Any
    second: Any


CompareEvidence = LT | EQ | GT


def compare_ev(a: Any, b: Any) -> CompareEvidence:
    """Compare two ordered values; the result carries both operands.

    Ordered shapes are non-bool ints, strings, and tuples of ordered shapes
    (lexicographic). Anything else raises TypeError.
    """
    _require_ordered(a)
    _require_ordered(b)
    return _compare(a, b)


def _require_ordered(x: Any) -> None:
    if type(x) is int or type(x) is str:
        return
    if type(x) is tuple:
        for item in x:
            _require_ordered(item)
        return
    raise TypeError(f"unordered shape: {type(x).__name__}")


def _compare(a: Any, b: Any) -> CompareEvidence:
    if type(a) is tuple and type(b) is tuple:
        for x, y in zip(a, b):
            ev = _compare(x, y)
            if not isinstance(ev, EQ):
                return LT(a, b) if isinstance(ev, LT) else GT(a, b)
        if len(a) == len(b):
            return EQ(a, b)
        return LT(a, b) if len(a) < len(b) else GT(a, b)
    if type(a) is not type(b):
        raise TypeError(f"cannot order {type(a).__name__} against {type(b).__name__}")
    if a == b:
        return EQ(a, b)
    return LT(a, b) if a < b else GT(a, b)


# ---------------------------------------------------------------------------
# Guard chains


def ensure_condition(c: Any) -> None:
    """Conditions are booleans or zero-argument callables (deferred)."""
    if not (isinstance(c, bool) or callable(c)):
        raise TypeError(f"condition must be a bool or a callable, got {type(c).__name__}")


def cond_holds(c: Any) -> bool:
    return bool(c() if callable(c) else c)


@dataclass(frozen=True)
class GuardChain:
    """Ordered (condition, result) branches with a mandatory fallback.

    Results may be plain values or programs; selecting one never evaluates it.
    """

    branches: tuple
    otherwise: Any

    def __post_init__(self) -> None:
        branches = tuple(tuple(b) for b in self.branches)
        for b in branches:
            if len(b) != 2:
                raise ValueError("guard branch must be a (condition, result) pair")
            ensure_condition(b[0])
        object.__setattr__(self, "branches", branches)


def eval_guards(chain: Any) -> Any:
    """Select the result of the first branch whose condition holds, else the
    fallback. Works on anything with `branches` / `otherwise` attributes
    (GuardChain here, the program-level guard node in effect_ast)."""
    for cond, result in chain.branches:
        if cond_holds(cond):
            return result
    return chain.otherwise


# ---------------------------------------------------------------------------
# List monad


def list_return(x: Any) -> list:
    return [x]


def list_bind(xs: Any, f: Callable[[Any], Any]) -> list:
    """Concatenation of f applied elementwise, order preserving."""
    out: list = []
    for x in xs:
        out.extend(f(x))
    return out
