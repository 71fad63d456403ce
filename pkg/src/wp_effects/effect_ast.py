"""Free-monad program trees for the exception and reader-writer-state effects.

Nodes are immutable data: building one never runs a condition, projection, or
continuation. `semantics` gives programs their operational meaning and `wp`
their weakest-precondition reading. Structural equality is deliberately not
provided (continuations are opaque host functions), so programs are compared
by running them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .prelude import GuardChain, Just, Left, Nothing, Right, ensure_condition, identity

__all__ = [
    "Ask",
    "Bail",
    "Bind",
    "CaseEither",
    "CaseMaybe",
    "EitherProg",
    "Gets",
    "GuardChain",
    "IfGuards",
    "Put",
    "Return",
    "RwsProg",
    "Tell",
    "ap",
    "fmap",
    "get",
    "modify",
]


@dataclass(frozen=True, eq=False)
class Return:
    """Pure result; no effects."""

    value: Any


@dataclass(frozen=True, eq=False)
class Bind:
    """Sequence `inner`, then the program produced by `cont` on its value."""

    inner: Any
    cont: Callable[[Any], Any]

    def __post_init__(self) -> None:
        _ensure_program(self.inner, "bind inner")
        if not callable(self.cont):
            raise TypeError("bind continuation must be callable")


@dataclass(frozen=True, eq=False)
class Bail:
    """Throw an error value (exception effect only)."""

    error: Any


@dataclass(frozen=True, eq=False)
class IfGuards:
    """First-true-wins guarded branches with a mandatory otherwise body.

    Conditions are booleans or zero-argument callables. `labels` optionally
    names each condition for obligation reports (one per branch).
    """

    branches: tuple
    otherwise: Any
    labels: tuple | None = None

    def __post_init__(self) -> None:
        branches = tuple(tuple(b) for b in self.branches)
        for b in branches:
            if len(b) != 2:
                raise ValueError("guard branch must be a (condition, body) pair")
            ensure_condition(b[0])
            _ensure_program(b[1], "guard body")
        object.__setattr__(self, "branches", branches)
        _ensure_program(self.otherwise, "otherwise body")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(branches):
                raise ValueError("need exactly one label per guard branch")
            object.__setattr__(self, "labels", labels)


@dataclass(frozen=True, eq=False)
class CaseEither:
    """Dispatch on a Left/Right value; both arms are continuations."""

    scrutinee: Any
    on_left: Callable[[Any], Any]
    on_right: Callable[[Any], Any]

    def __post_init__(self) -> None:
        if not isinstance(self.scrutinee, (Left, Right)):
            raise TypeError("case-either scrutinee must be a Left or Right value")
        if not callable(self.on_left):
            raise TypeError("case-either left arm must be callable")
        if not callable(self.on_right):
            raise TypeError("case-either right arm must be callable")


@dataclass(frozen=True, eq=False)
class CaseMaybe:
    """Dispatch on a Nothing/Just value; the nothing arm is a plain program."""

    scrutinee: Any
    on_nothing: Any
    on_just: Callable[[Any], Any]

    def __post_init__(self) -> None:
        if not isinstance(self.scrutinee, (Nothing, Just)):
            raise TypeError("case-maybe scrutinee must be a Nothing or Just value")
        _ensure_program(self.on_nothing, "nothing arm")
        if not callable(self.on_just):
            raise TypeError("case-maybe just arm must be callable")


@dataclass(frozen=True, eq=False)
class Gets:
    """Read a projection of the state."""

    projection: Callable[[Any], Any]

    def __post_init__(self) -> None:
        if not callable(self.projection):
            raise TypeError("gets projection must be callable")


@dataclass(frozen=True, eq=False)
class Put:
    """Replace the state."""

    state: Any


@dataclass(frozen=True, eq=False)
class Ask:
    """Read the environment."""


@dataclass(frozen=True, eq=False)
class Tell:
    """Append a finite sequence of outputs."""

    outputs: tuple

    def __post_init__(self) -> None:
        if not isinstance(self.outputs, (tuple, list)):
            raise TypeError("tell payload must be a sequence of outputs")
        object.__setattr__(self, "outputs", tuple(self.outputs))


EitherProg = Return | Bind | Bail | IfGuards | CaseEither | CaseMaybe
RwsProg = Return | Bind | Gets | Put | Ask | Tell | IfGuards | CaseEither | CaseMaybe

_NODE_TYPES = (Return, Bind, Bail, IfGuards, CaseEither, CaseMaybe, Gets, Put, Ask, Tell)


def _ensure_program(p: Any, what: str) -> None:
    if not isinstance(p, _NODE_TYPES):
        raise TypeError(f"{what} must be a program node, got {type(p).__name__}")


# ---------------------------------------------------------------------------
# Derived operations


def fmap(m: Any, g: Callable[[Any], Any]) -> Bind:
    """Map a pure function over the success value: Bind(m, x -> Return(g x))."""
    return Bind(m, lambda x: Return(g(x)))


def ap(mf: Any, mx: Any) -> Bind:
    """Apply a program-yielded function to a program-yielded argument.

    Effects of `mf` happen before effects of `mx` (left to right).
    """
    return Bind(mf, lambda f: Bind(mx, lambda x: Return(f(x))))


def get() -> Gets:
    """Whole-state read, spelled Gets(identity); there is no dedicated node."""
    return Gets(identity)


def modify(f: Callable[[Any], Any]) -> Bind:
    """Read the state and write back f of it."""
    return Bind(Gets(identity), lambda s: Put(f(s)))
