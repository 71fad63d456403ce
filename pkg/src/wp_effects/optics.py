"""Get/set lenses over record-shaped values, with state-effect integration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable

from . import effect_ast as ast
from .prelude import identity


@dataclass(frozen=True)
class Lens:
    """A getter/setter pair. Lawfulness (GetSet, SetGet, SetSet) is a
    property of the functions supplied, checked by tests, not enforced here."""

    get: Callable[[Any], Any]
    set: Callable[[Any, Any], Any]


def mk_lens(get: Callable[[Any], Any], set: Callable[[Any, Any], Any]) -> Lens:
    return Lens(get, set)


identity_lens = Lens(identity, lambda s, v: v)


def compose(outer: Lens, inner: Lens) -> Lens:
    """Focus through `outer` then `inner` (outer.part must be inner's whole)."""
    return Lens(
        get=lambda s: inner.get(outer.get(s)),
        set=lambda s, v: outer.set(s, inner.set(outer.get(s), v)),
    )


def field(name: str) -> Lens:
    """Lens onto one key of a mapping; setting copies the mapping."""

    def get(s: Any) -> Any:
        return s[name]

    def set(s: Any, v: Any) -> Any:
        out = dict(s)
        out[name] = v
        return out

    return Lens(get, set)


def field_path(*names: str) -> Lens:
    """Composed lens for a nested field path, e.g. field_path("a", "b")."""
    return reduce(compose, (field(n) for n in names), identity_lens)


# ---------------------------------------------------------------------------
# Reader-writer-state integration


def use(lens: Lens) -> ast.Gets:
    """Read the focused part of the state."""
    return ast.Gets(lens.get)


def assign(lens: Lens, v: Any) -> ast.Bind:
    """Set the focused part of the state, via get and put."""
    return ast.Bind(ast.Gets(identity), lambda s: ast.Put(lens.set(s, v)))


def modifying(lens: Lens, f: Callable[[Any], Any]) -> ast.Bind:
    """Update the focused part of the state by applying f."""
    return ast.Bind(ast.Gets(identity), lambda s: ast.Put(lens.set(s, f(lens.get(s)))))
