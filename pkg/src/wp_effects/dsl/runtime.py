"""From checked surface programs to effect trees, plus the expression
evaluator, value literals, and value serialization.

Runtime values are host values: unit is None, records are dicts (field order
preserved), sequences are tuples, and maybe/either values are the prelude's
Nothing/Just/Left/Right. Expressions are pure; they are evaluated when the
enclosing program node is constructed, which performs no effects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .. import effect_ast as ast
from ..optics import field_path, identity_lens
from ..optics import assign as lens_assign
from ..optics import modifying as lens_modifying
from ..optics import use as lens_use
from ..prelude import (
    EQ,
    LT,
    GuardChain,
    Just,
    Left,
    Nothing,
    Right,
    compare_ev,
    eq,
    eval_guards,
    is_left,
    is_nothing,
    is_right,
    neq,
)
from ..semantics import RwsOutcome
from .sexpr import SexprError, SourcePos, SStr, parse_sexprs, write_sexpr
from .syntax import (
    INT_MAX,
    INT_MIN,
    BoolShape,
    EArith,
    EBoolOp,
    ECmp,
    EGuard,
    EitherShape,
    EJust,
    ELeft,
    ELen,
    ELit,
    ENot,
    ENothing,
    ENth,
    EPath,
    ERecord,
    ERight,
    ESeq,
    ETag,
    ETest,
    EVar,
    IntShape,
    MaybeShape,
    PAsk,
    PAssign,
    PBail,
    PBind,
    PCaseEither,
    PCaseMaybe,
    PGets,
    PIfGuards,
    PModifying,
    PName,
    PPut,
    ParseError,
    PReturn,
    ProgramFile,
    PTell,
    PUse,
    RecordShape,
    SeqShape,
    Shape,
    StrShape,
    TagShape,
    UnitShape,
    expr_to_sexpr,
    parse_expr,
    shape_str,
)


@dataclass(frozen=True)
class Tag:
    name: str


class DslRunError(Exception):
    def __init__(self, message: str, pos: SourcePos | None = None):
        super().__init__(f"{pos}: {message}" if pos is not None else message)
        self.message = message
        self.pos = pos


class LiteralError(Exception):
    pass


# ---------------------------------------------------------------------------
# Expression evaluation


def _checked_int(n: int, pos: SourcePos) -> int:
    if not (INT_MIN <= n <= INT_MAX):
        raise DslRunError(f"integer overflow: {n}", pos)
    return n


def eval_expr(e: Any, env: dict[str, Any]) -> Any:
    match e:
        case ELit(value=v):
            return v
        case ETag(name=name):
            return Tag(name)
        case ENothing():
            return Nothing()
        case EVar(name=name):
            return env[name]
        case EPath(root=root, fields=fields):
            value = env[root]
            for name in fields:
                value = value[name]
            return value
        case EJust(expr=inner):
            return Just(eval_expr(inner, env))
        case ELeft(expr=inner):
            return Left(eval_expr(inner, env))
        case ERight(expr=inner):
            return Right(eval_expr(inner, env))
        case ESeq(items=items):
            return tuple(eval_expr(i, env) for i in items)
        case ERecord(fields=fields):
            return {name: eval_expr(v, env) for name, v in fields}
        case EArith(op=op, left=left, right=right, pos=pos):
            a = eval_expr(left, env)
            b = eval_expr(right, env)
            return _checked_int(a + b if op == "+" else a - b, pos)
        case ECmp(op=op, left=left, right=right):
            a = eval_expr(left, env)
            b = eval_expr(right, env)
            if op == "==":
                return eq(a, b)
            if op == "/=":
                return neq(a, b)
            ev = compare_ev(a, b)
            return isinstance(ev, LT) if op == "<" else isinstance(ev, (LT, EQ))
        case EBoolOp(op=op, args=args):
            if op == "and":
                return all(eval_expr(a, env) for a in args)
            return any(eval_expr(a, env) for a in args)
        case ENot(expr=inner):
            return not eval_expr(inner, env)
        case ETest(op=op, expr=inner):
            value = eval_expr(inner, env)
            if op == "is-nothing":
                return is_nothing(value)
            return is_left(value) if op == "is-left" else is_right(value)
        case ELen(expr=inner):
            return len(eval_expr(inner, env))
        case ENth(seq=seq, index=index, pos=pos):
            items = eval_expr(seq, env)
            i = eval_expr(index, env)
            if not (0 <= i < len(items)):
                raise DslRunError(f"sequence index out of range: {i}", pos)
            return items[i]
        case EGuard(branches=branches, otherwise=otherwise):
            chain = GuardChain(
                tuple(
                    (lambda c=cond: bool(eval_expr(c, env)), lambda r=result: eval_expr(r, env))
                    for cond, result in branches
                ),
                lambda o=otherwise: eval_expr(o, env),
            )
            return eval_guards(chain)()
        case _:
            raise TypeError(f"not a surface expression node: {type(e).__name__}")


# ---------------------------------------------------------------------------
# Compiling programs


@dataclass(frozen=True)
class CompileContext:
    defines: dict


def compile_program(pf: ProgramFile) -> Any:
    """Build the effect tree for a checked file's entry program."""
    return compile_prog(pf.entry, {}, CompileContext(dict(pf.defines)))


def compile_prog(p: Any, env: dict[str, Any], ctx: CompileContext) -> Any:
    match p:
        case PReturn(expr=e):
            return ast.Return(eval_expr(e, env))
        case PBail(expr=e):
            return ast.Bail(eval_expr(e, env))
        case PBind(inner=inner, var=var, body=body):
            return ast.Bind(
                compile_prog(inner, env, ctx),
                lambda v: compile_prog(body, {**env, var: v}, ctx),
            )
        case PIfGuards(branches=branches, otherwise=otherwise):
            return ast.IfGuards(
                tuple((bool(eval_expr(cond, env)), compile_prog(body, env, ctx)) for cond, body in branches),
                compile_prog(otherwise, env, ctx),
                labels=tuple(write_sexpr(expr_to_sexpr(cond)) for cond, _ in branches),
            )
        case PCaseEither(scrutinee=s, left_var=lv, left_body=lb, right_var=rv, right_body=rb):
            return ast.CaseEither(
                eval_expr(s, env),
                lambda a: compile_prog(lb, {**env, lv: a}, ctx),
                lambda b: compile_prog(rb, {**env, rv: b}, ctx),
            )
        case PCaseMaybe(scrutinee=s, nothing_body=nb, just_var=jv, just_body=jb):
            return ast.CaseMaybe(
                eval_expr(s, env),
                compile_prog(nb, env, ctx),
                lambda v: compile_prog(jb, {**env, jv: v}, ctx),
            )
        case PGets(expr=e):
            return ast.Gets(lambda s: eval_expr(e, {**env, "state": s}))
        case PPut(expr=e):
            return ast.Put(eval_expr(e, env))
        case PAsk():
            return ast.Ask()
        case PTell(exprs=es):
            return ast.Tell(tuple(eval_expr(e, env) for e in es))
        case PUse(path=path):
            return lens_use(_path_lens(path))
        case PAssign(path=path, expr=e):
            return lens_assign(_path_lens(path), eval_expr(e, env))
        case PModifying(path=path, expr=e):
            return lens_modifying(_path_lens(path), lambda cur: eval_expr(e, {**env, "it": cur}))
        case PName(name=name):
            return compile_prog(ctx.defines[name], {}, ctx)
        case _:
            raise TypeError(f"not a surface program node: {type(p).__name__}")


def _path_lens(path: tuple):
    if len(path) == 1:
        return identity_lens
    return field_path(*path[1:])


# ---------------------------------------------------------------------------
# Postconditions


def compile_post(pf: ProgramFile, name: str) -> Callable[[Any], bool]:
    """Host predicate for a named postcondition, over the outcome of the
    file's kind (Left/Right for either, the outcome triple for rws)."""
    expr = dict(pf.posts)[name]
    if pf.kind == "either":
        return lambda outcome: bool(eval_expr(expr, {"result": outcome}))

    def rws_post(outcome: RwsOutcome) -> bool:
        return bool(
            eval_expr(
                expr,
                {"result": outcome.value, "post-state": outcome.state, "outputs": outcome.outputs},
            )
        )

    return rws_post


# ---------------------------------------------------------------------------
# Value literals


def parse_value_literal(text: str, shape: Shape) -> Any:
    """Parse a value literal (the s-expression literal sublanguage) against a
    declared shape; raises LiteralError on malformed or mismatched input."""
    try:
        forms = parse_sexprs(text)
    except SexprError as exc:
        raise LiteralError(f"malformed literal: {exc.message}") from exc
    if len(forms) != 1:
        raise LiteralError("expected exactly one value literal")
    try:
        expr = parse_expr(forms[0])
    except ParseError as exc:
        raise LiteralError(f"malformed literal: {exc.message}") from exc
    return _value_from_expr(expr, shape)


_LITERAL_NODES = (ELit, ETag, ENothing, EJust, ELeft, ERight, ESeq, ERecord)


def _value_from_expr(e: Any, shape: Shape) -> Any:
    if not isinstance(e, _LITERAL_NODES):
        raise LiteralError("value literals may only use literal forms")
    match e, shape:
        case (ELit(value=None), UnitShape()):
            return None
        case (ELit(value=bool() as b), BoolShape()):
            return b
        case (ELit(value=int() as n), IntShape()):
            if not (INT_MIN <= n <= INT_MAX):
                raise LiteralError(f"integer literal out of range: {n}")
            return n
        case (ELit(value=str() as s), StrShape()):
            return s
        case (ETag(name=name), TagShape()):
            return Tag(name)
        case (ENothing(), MaybeShape()):
            return Nothing()
        case (EJust(expr=inner), MaybeShape(elem=elem)):
            return Just(_value_from_expr(inner, elem))
        case (ELeft(expr=inner), EitherShape(left=left)):
            return Left(_value_from_expr(inner, left))
        case (ERight(expr=inner), EitherShape(right=right)):
            return Right(_value_from_expr(inner, right))
        case (ESeq(items=items), SeqShape(elem=elem)):
            return tuple(_value_from_expr(i, elem) for i in items)
        case (ERecord(fields=fields), RecordShape(fields=decl)):
            given = dict(fields)
            declared = [name for name, _ in decl]
            for name in given:
                if name not in declared:
                    raise LiteralError(f"unknown field {name}")
            for name in declared:
                if name not in given:
                    raise LiteralError(f"missing field {name}")
            return {name: _value_from_expr(given[name], fshape) for name, fshape in decl}
        case _:
            raise LiteralError(f"literal does not match shape {shape_str(shape)}")


# ---------------------------------------------------------------------------
# Value serialization


def value_to_jsonable(v: Any) -> Any:
    """Stable JSON encoding: unit null, tags {"tag": name}, maybe/either as
    one-key objects, records {"record": {...}}, sequences arrays."""
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Tag):
        return {"tag": v.name}
    if isinstance(v, Nothing):
        return {"nothing": None}
    if isinstance(v, Just):
        return {"just": value_to_jsonable(v.value)}
    if isinstance(v, Left):
        return {"left": value_to_jsonable(v.value)}
    if isinstance(v, Right):
        return {"right": value_to_jsonable(v.value)}
    if isinstance(v, dict):
        return {"record": {name: value_to_jsonable(item) for name, item in v.items()}}
    if isinstance(v, tuple):
        return [value_to_jsonable(item) for item in v]
    raise TypeError(f"not a runtime value: {type(v).__name__}")


def value_to_text(v: Any) -> str:
    """Render a runtime value back in literal syntax."""
    if v is None:
        return "unit"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return write_sexpr(SStr(v))
    if isinstance(v, Tag):
        return f"(tag {v.name})"
    if isinstance(v, Nothing):
        return "nothing"
    if isinstance(v, Just):
        return f"(just {value_to_text(v.value)})"
    if isinstance(v, Left):
        return f"(left {value_to_text(v.value)})"
    if isinstance(v, Right):
        return f"(right {value_to_text(v.value)})"
    if isinstance(v, dict):
        inner = " ".join(f"({name} {value_to_text(item)})" for name, item in v.items())
        return f"(record {inner})" if inner else "(record)"
    if isinstance(v, tuple):
        inner = " ".join(value_to_text(item) for item in v)
        return f"(seq {inner})" if inner else "(seq)"
    raise TypeError(f"not a runtime value: {type(v).__name__}")
