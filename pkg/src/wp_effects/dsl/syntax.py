"""Surface language: value shapes, program/expression ASTs, the program-file
container, and the parser/printer pair between them and s-expression text."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .sexpr import (
    SInt,
    SList,
    SNode,
    SSym,
    SStr,
    SexprError,
    SourcePos,
    parse_sexprs,
    slist,
    sym,
    write_sexpr,
)

_NOWHERE = SourcePos(0, 0)

INT_MIN = -(2**31)
INT_MAX = 2**31 - 1


class ParseError(Exception):
    def __init__(self, message: str, pos: SourcePos):
        super().__init__(f"{pos}: {message}")
        self.message = message
        self.pos = pos


# ---------------------------------------------------------------------------
# Shapes


@dataclass(frozen=True)
class UnitShape:
    pass


@dataclass(frozen=True)
class BoolShape:
    pass


@dataclass(frozen=True)
class IntShape:
    pass


@dataclass(frozen=True)
class StrShape:
    pass


@dataclass(frozen=True)
class TagShape:
    pass


@dataclass(frozen=True)
class BottomShape:
    """Wildcard shape of expressions with no value of their own (bail results,
    `nothing`, the empty sequence); unifies with anything."""


@dataclass(frozen=True)
class MaybeShape:
    elem: Any


@dataclass(frozen=True)
class EitherShape:
    left: Any
    right: Any


@dataclass(frozen=True)
class SeqShape:
    elem: Any


@dataclass(frozen=True)
class RecordShape:
    fields: tuple  # of (name, shape) pairs, declaration order


Shape = (
    UnitShape
    | BoolShape
    | IntShape
    | StrShape
    | TagShape
    | BottomShape
    | MaybeShape
    | EitherShape
    | SeqShape
    | RecordShape
)

UNIT = UnitShape()
BOOL = BoolShape()
INT = IntShape()
STR = StrShape()
TAG = TagShape()
BOTTOM = BottomShape()

_BASE_SHAPES = {"unit": UNIT, "bool": BOOL, "int": INT, "str": STR, "tag": TAG}


def unify(a: Shape, b: Shape) -> Shape | None:
    """Most specific common shape, or None when the two are incompatible."""
    if isinstance(a, BottomShape):
        return b
    if isinstance(b, BottomShape):
        return a
    if type(a) is not type(b):
        return None
    match a:
        case MaybeShape(elem=ea):
            elem = unify(ea, b.elem)
            return None if elem is None else MaybeShape(elem)
        case EitherShape(left=la, right=ra):
            left = unify(la, b.left)
            right = unify(ra, b.right)
            return None if left is None or right is None else EitherShape(left, right)
        case SeqShape(elem=ea):
            elem = unify(ea, b.elem)
            return None if elem is None else SeqShape(elem)
        case RecordShape(fields=fa):
            if tuple(n for n, _ in fa) != tuple(n for n, _ in b.fields):
                return None
            merged = []
            for (name, sa), (_, sb) in zip(fa, b.fields):
                s = unify(sa, sb)
                if s is None:
                    return None
                merged.append((name, s))
            return RecordShape(tuple(merged))
        case _:
            return a


def is_ordered_shape(s: Shape) -> bool:
    return isinstance(s, (IntShape, StrShape, BottomShape))


def record_field(shape: Shape, name: str) -> Shape | None:
    if not isinstance(shape, RecordShape):
        return None
    for fname, fshape in shape.fields:
        if fname == name:
            return fshape
    return None


def shape_to_sexpr(s: Shape) -> SNode:
    match s:
        case UnitShape():
            return sym("unit")
        case BoolShape():
            return sym("bool")
        case IntShape():
            return sym("int")
        case StrShape():
            return sym("str")
        case TagShape():
            return sym("tag")
        case BottomShape():
            return sym("_")
        case MaybeShape(elem=elem):
            return slist(sym("maybe"), shape_to_sexpr(elem))
        case EitherShape(left=left, right=right):
            return slist(sym("either"), shape_to_sexpr(left), shape_to_sexpr(right))
        case SeqShape(elem=elem):
            return slist(sym("seq"), shape_to_sexpr(elem))
        case RecordShape(fields=fields):
            return slist(sym("record"), *(slist(sym(n), shape_to_sexpr(fs)) for n, fs in fields))
        case _:
            raise TypeError(f"not a shape: {type(s).__name__}")


def shape_str(s: Shape) -> str:
    return write_sexpr(shape_to_sexpr(s))


def parse_shape(node: SNode) -> Shape:
    match node:
        case SSym(name=name, pos=pos):
            if name in _BASE_SHAPES:
                return _BASE_SHAPES[name]
            raise ParseError(f"unknown shape: {name}", pos)
        case SList(items=items, pos=pos) if items and isinstance(items[0], SSym):
            head = items[0].name
            if head == "maybe" and len(items) == 2:
                return MaybeShape(parse_shape(items[1]))
            if head == "either" and len(items) == 3:
                return EitherShape(parse_shape(items[1]), parse_shape(items[2]))
            if head == "seq" and len(items) == 2:
                return SeqShape(parse_shape(items[1]))
            if head == "record":
                fields = []
                seen = set()
                for item in items[1:]:
                    if not (isinstance(item, SList) and len(item.items) == 2 and isinstance(item.items[0], SSym)):
                        raise ParseError("record field must be (name shape)", _pos(item))
                    fname = item.items[0].name
                    if fname in seen:
                        raise ParseError(f"duplicate record field: {fname}", item.items[0].pos)
                    seen.add(fname)
                    fields.append((fname, parse_shape(item.items[1])))
                return RecordShape(tuple(fields))
            raise ParseError(f"unknown shape form: {head}", pos)
        case _:
            raise ParseError("expected a shape", _pos(node))


# ---------------------------------------------------------------------------
# Expression AST


@dataclass(frozen=True)
class ELit:
    value: Any  # None, bool, int, or str
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ETag:
    name: str
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ENothing:
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class EVar:
    name: str
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class EPath:
    root: str
    fields: tuple
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class EJust:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ELeft:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ERight:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ESeq:
    items: tuple
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ERecord:
    fields: tuple  # of (name, expr)
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class EArith:
    op: str  # "+" | "-"
    left: Any
    right: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ECmp:
    op: str  # "==" | "/=" | "<" | "<="
    left: Any
    right: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class EBoolOp:
    op: str  # "and" | "or"
    args: tuple
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ENot:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ETest:
    op: str  # "is-nothing" | "is-left" | "is-right"
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ELen:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class ENth:
    seq: Any
    index: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class EGuard:
    branches: tuple  # of (condition expr, result expr)
    otherwise: Any | None
    pos: SourcePos = field(default=_NOWHERE, compare=False)


Expr = (
    ELit
    | ETag
    | ENothing
    | EVar
    | EPath
    | EJust
    | ELeft
    | ERight
    | ESeq
    | ERecord
    | EArith
    | ECmp
    | EBoolOp
    | ENot
    | ETest
    | ELen
    | ENth
    | EGuard
)


# ---------------------------------------------------------------------------
# Program AST


@dataclass(frozen=True)
class PReturn:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PBind:
    inner: Any
    var: str
    body: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PBail:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PIfGuards:
    branches: tuple  # of (condition expr, program)
    otherwise: Any | None  # None is a totality violation caught by typecheck
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PCaseEither:
    scrutinee: Any
    left_var: str
    left_body: Any
    right_var: str
    right_body: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PCaseMaybe:
    scrutinee: Any
    nothing_body: Any
    just_var: str
    just_body: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PGets:
    expr: Any  # may refer to the reserved variable `state`
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PPut:
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PAsk:
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PTell:
    exprs: tuple
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PUse:
    path: tuple  # ("state", field, ...)
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PAssign:
    path: tuple
    expr: Any
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PModifying:
    path: tuple
    expr: Any  # may refer to the reserved variable `it`
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class PName:
    name: str
    pos: SourcePos = field(default=_NOWHERE, compare=False)


Prog = (
    PReturn
    | PBind
    | PBail
    | PIfGuards
    | PCaseEither
    | PCaseMaybe
    | PGets
    | PPut
    | PAsk
    | PTell
    | PUse
    | PAssign
    | PModifying
    | PName
)


@dataclass(frozen=True)
class ProgramFile:
    kind: str  # "either" | "rws"
    state_shape: Shape | None
    env_shape: Shape | None
    output_shape: Shape | None
    error_shape: Shape | None
    defines: tuple  # of (name, Prog), file order
    posts: tuple  # of (name, Expr), file order
    entry: Prog


# ---------------------------------------------------------------------------
# Reserved words


_PROG_HEADS = {
    "return",
    "bind",
    "bail",
    "if-guards",
    "case-either",
    "case-maybe",
    "gets",
    "put",
    "ask",
    "tell",
    "use",
    "assign",
    "modifying",
}

_EXPR_HEADS = {
    "tag",
    "just",
    "left",
    "right",
    "seq",
    "record",
    "and",
    "or",
    "not",
    "is-nothing",
    "is-left",
    "is-right",
    "len",
    "nth",
    "guard",
    "+",
    "-",
    "==",
    "/=",
    "<",
    "<=",
}

_DECL_HEADS = {"program", "state", "env", "output", "error", "define", "post", "entry"}

_ATOM_KEYWORDS = {"true", "false", "unit", "nothing", "otherwise"}

_SHAPE_WORDS = {"unit", "bool", "int", "str", "maybe", "either", "rws"}

# Words a variable reference may not use. Declaration heads that read
# naturally as identifiers (state, env, output, error, post) stay available:
# `state`, `it`, `result`, `post-state`, and `outputs` are bound by context.
_VAR_FORBIDDEN = _PROG_HEADS | _EXPR_HEADS | _ATOM_KEYWORDS | {"program", "define", "entry", "either", "rws"}

CONTEXT_NAMES = {"state", "it", "result", "post-state", "outputs"}

# Words that may not be bound by bind/case binders or define/post names.
_BINDER_FORBIDDEN = _PROG_HEADS | _EXPR_HEADS | _DECL_HEADS | _ATOM_KEYWORDS | _SHAPE_WORDS | CONTEXT_NAMES


def _pos(node: SNode) -> SourcePos:
    return node.pos


def _binder_name(node: SNode, what: str) -> str:
    if not isinstance(node, SSym):
        raise ParseError(f"{what} must be a name", _pos(node))
    name = node.name
    if name in _BINDER_FORBIDDEN:
        raise ParseError(f"{what} may not be the reserved word {name}", node.pos)
    if "." in name:
        raise ParseError(f"{what} may not contain '.'", node.pos)
    return name


def _parse_path(node: SNode) -> tuple:
    if not isinstance(node, SSym):
        raise ParseError("expected a field path like state.field", _pos(node))
    segments = tuple(node.name.split("."))
    if any(not seg for seg in segments):
        raise ParseError(f"malformed field path: {node.name}", node.pos)
    if segments[0] in _VAR_FORBIDDEN:
        raise ParseError(f"path root may not be the reserved word {segments[0]}", node.pos)
    return segments


# ---------------------------------------------------------------------------
# Expression parsing


def parse_expr(node: SNode) -> Expr:
    match node:
        case SInt(value=v, pos=pos):
            return ELit(v, pos)
        case SStr(value=v, pos=pos):
            return ELit(v, pos)
        case SSym(name="true", pos=pos):
            return ELit(True, pos)
        case SSym(name="false", pos=pos):
            return ELit(False, pos)
        case SSym(name="unit", pos=pos):
            return ELit(None, pos)
        case SSym(name="nothing", pos=pos):
            return ENothing(pos)
        case SSym(name=name, pos=pos):
            if "." in name:
                segments = _parse_path(node)
                return EPath(segments[0], segments[1:], pos)
            if name in _VAR_FORBIDDEN:
                raise ParseError(f"reserved word in expression position: {name}", pos)
            return EVar(name, pos)
        case SList(items=items, pos=pos):
            if not items or not isinstance(items[0], SSym):
                raise ParseError("expected an expression form", pos)
            return _parse_expr_form(items[0].name, items, pos)
        case _:
            raise ParseError("expected an expression", _pos(node))


def _parse_expr_form(head: str, items: tuple, pos: SourcePos) -> Expr:
    def need(n: int, usage: str) -> None:
        if len(items) != n:
            raise ParseError(f"{head} expects {usage}", pos)

    if head == "tag":
        need(2, "one tag name")
        if not isinstance(items[1], SSym):
            raise ParseError("tag name must be a symbol", _pos(items[1]))
        return ETag(items[1].name, pos)
    if head == "just":
        need(2, "one argument")
        return EJust(parse_expr(items[1]), pos)
    if head == "left":
        need(2, "one argument")
        return ELeft(parse_expr(items[1]), pos)
    if head == "right":
        need(2, "one argument")
        return ERight(parse_expr(items[1]), pos)
    if head == "seq":
        return ESeq(tuple(parse_expr(i) for i in items[1:]), pos)
    if head == "record":
        fields = []
        seen = set()
        for item in items[1:]:
            if not (isinstance(item, SList) and len(item.items) == 2 and isinstance(item.items[0], SSym)):
                raise ParseError("record field must be (name expr)", _pos(item))
            fname = item.items[0].name
            if fname in seen:
                raise ParseError(f"duplicate record field: {fname}", item.items[0].pos)
            seen.add(fname)
            fields.append((fname, parse_expr(item.items[1])))
        return ERecord(tuple(fields), pos)
    if head in ("+", "-"):
        need(3, "two arguments")
        return EArith(head, parse_expr(items[1]), parse_expr(items[2]), pos)
    if head in ("==", "/=", "<", "<="):
        need(3, "two arguments")
        return ECmp(head, parse_expr(items[1]), parse_expr(items[2]), pos)
    if head in ("and", "or"):
        if len(items) < 3:
            raise ParseError(f"{head} expects at least two arguments", pos)
        return EBoolOp(head, tuple(parse_expr(i) for i in items[1:]), pos)
    if head == "not":
        need(2, "one argument")
        return ENot(parse_expr(items[1]), pos)
    if head in ("is-nothing", "is-left", "is-right"):
        need(2, "one argument")
        return ETest(head, parse_expr(items[1]), pos)
    if head == "len":
        need(2, "one argument")
        return ELen(parse_expr(items[1]), pos)
    if head == "nth":
        need(3, "a sequence and an index")
        return ENth(parse_expr(items[1]), parse_expr(items[2]), pos)
    if head == "guard":
        branches, otherwise = _parse_clauses(items[1:], pos, parse_expr)
        return EGuard(branches, otherwise, pos)
    raise ParseError(f"unknown expression form: {head}", pos)


def _parse_clauses(items: tuple, pos: SourcePos, parse_body):
    """Shared clause syntax of guard chains: (cond body)* (otherwise body)?"""
    branches = []
    otherwise = None
    for item in items:
        if not (isinstance(item, SList) and len(item.items) == 2):
            raise ParseError("guard clause must be (condition body) or (otherwise body)", _pos(item))
        first, second = item.items
        if isinstance(first, SSym) and first.name == "otherwise":
            if otherwise is not None:
                raise ParseError("duplicate otherwise clause", item.pos)
            otherwise = parse_body(second)
        else:
            if otherwise is not None:
                raise ParseError("otherwise must be the last clause", item.pos)
            branches.append((parse_expr(first), parse_body(second)))
    return tuple(branches), otherwise


# ---------------------------------------------------------------------------
# Program parsing


def parse_prog(node: SNode) -> Prog:
    match node:
        case SSym(name=name, pos=pos):
            if name in _BINDER_FORBIDDEN or "." in name:
                raise ParseError(f"expected a program, got {name}", pos)
            return PName(name, pos)
        case SList(items=items, pos=pos):
            if not items or not isinstance(items[0], SSym):
                raise ParseError("expected a program form", pos)
            return _parse_prog_form(items[0].name, items, pos)
        case _:
            raise ParseError("expected a program", _pos(node))


def _parse_binder_clause(node: SNode, what: str) -> tuple[str, Prog]:
    if not (isinstance(node, SList) and len(node.items) == 2):
        raise ParseError(f"{what} must be (name program)", _pos(node))
    return _binder_name(node.items[0], f"{what} binder"), parse_prog(node.items[1])


def _parse_prog_form(head: str, items: tuple, pos: SourcePos) -> Prog:
    def need(n: int, usage: str) -> None:
        if len(items) != n:
            raise ParseError(f"{head} expects {usage}", pos)

    if head == "return":
        need(2, "one expression")
        return PReturn(parse_expr(items[1]), pos)
    if head == "bind":
        need(3, "a program and a (name program) continuation")
        var, body = _parse_binder_clause(items[2], "bind continuation")
        return PBind(parse_prog(items[1]), var, body, pos)
    if head == "bail":
        need(2, "one expression")
        return PBail(parse_expr(items[1]), pos)
    if head == "if-guards":
        branches, otherwise = _parse_clauses(items[1:], pos, parse_prog)
        return PIfGuards(branches, otherwise, pos)
    if head == "case-either":
        need(4, "a scrutinee and two (name program) arms")
        lv, lb = _parse_binder_clause(items[2], "case-either left arm")
        rv, rb = _parse_binder_clause(items[3], "case-either right arm")
        return PCaseEither(parse_expr(items[1]), lv, lb, rv, rb, pos)
    if head == "case-maybe":
        need(4, "a scrutinee, a nothing program, and a (name program) arm")
        jv, jb = _parse_binder_clause(items[3], "case-maybe just arm")
        return PCaseMaybe(parse_expr(items[1]), parse_prog(items[2]), jv, jb, pos)
    if head == "gets":
        need(2, "one expression over `state`")
        return PGets(parse_expr(items[1]), pos)
    if head == "put":
        need(2, "one expression")
        return PPut(parse_expr(items[1]), pos)
    if head == "ask":
        need(1, "no arguments")
        return PAsk(pos)
    if head == "tell":
        return PTell(tuple(parse_expr(i) for i in items[1:]), pos)
    if head == "use":
        need(2, "one field path")
        return PUse(_parse_path(items[1]), pos)
    if head == "assign":
        need(3, "a field path and an expression")
        return PAssign(_parse_path(items[1]), parse_expr(items[2]), pos)
    if head == "modifying":
        need(3, "a field path and an expression over `it`")
        return PModifying(_parse_path(items[1]), parse_expr(items[2]), pos)
    raise ParseError(f"unknown program form: {head}", pos)


# ---------------------------------------------------------------------------
# Program files


def parse_program(text: str) -> ProgramFile:
    """Parse the single (program ...) form of a program file."""
    try:
        forms = parse_sexprs(text)
    except SexprError as exc:
        raise ParseError(exc.message, exc.pos) from exc
    if len(forms) != 1:
        pos = _pos(forms[1]) if len(forms) > 1 else _NOWHERE
        raise ParseError("a program file holds exactly one (program ...) form", pos)
    top = forms[0]
    if not (isinstance(top, SList) and top.items and isinstance(top.items[0], SSym) and top.items[0].name == "program"):
        raise ParseError("expected (program either|rws ...)", _pos(top))
    if len(top.items) < 2 or not isinstance(top.items[1], SSym) or top.items[1].name not in ("either", "rws"):
        raise ParseError("program kind must be either or rws", top.pos)
    kind = top.items[1].name

    shapes: dict[str, Shape] = {}
    defines: list[tuple[str, Prog]] = []
    posts: list[tuple[str, Expr]] = []
    names_seen: set[str] = set()
    entry: Prog | None = None

    for decl in top.items[2:]:
        if not (isinstance(decl, SList) and decl.items and isinstance(decl.items[0], SSym)):
            raise ParseError("expected a declaration form", _pos(decl))
        head = decl.items[0].name
        if head in ("state", "env", "output", "error"):
            if len(decl.items) != 2:
                raise ParseError(f"{head} expects one shape", decl.pos)
            if head in shapes:
                raise ParseError(f"duplicate {head} declaration", decl.pos)
            shapes[head] = parse_shape(decl.items[1])
        elif head == "define":
            if len(decl.items) != 3:
                raise ParseError("define expects a name and a program", decl.pos)
            name = _binder_name(decl.items[1], "definition name")
            if name in names_seen:
                raise ParseError(f"duplicate definition name: {name}", decl.pos)
            names_seen.add(name)
            defines.append((name, parse_prog(decl.items[2])))
        elif head == "post":
            if len(decl.items) != 3:
                raise ParseError("post expects a name and an expression", decl.pos)
            name = _binder_name(decl.items[1], "postcondition name")
            if name in names_seen:
                raise ParseError(f"duplicate definition name: {name}", decl.pos)
            names_seen.add(name)
            posts.append((name, parse_expr(decl.items[2])))
        elif head == "entry":
            if len(decl.items) != 2:
                raise ParseError("entry expects one program", decl.pos)
            if entry is not None:
                raise ParseError("duplicate entry declaration", decl.pos)
            entry = parse_prog(decl.items[1])
        else:
            raise ParseError(f"unknown declaration form: {head}", decl.pos)

    if entry is None:
        raise ParseError("program file needs an (entry ...) declaration", top.pos)

    return ProgramFile(
        kind=kind,
        state_shape=shapes.get("state"),
        env_shape=shapes.get("env"),
        output_shape=shapes.get("output"),
        error_shape=shapes.get("error"),
        defines=tuple(defines),
        posts=tuple(posts),
        entry=entry,
    )


# ---------------------------------------------------------------------------
# Printing


def expr_to_sexpr(e: Expr) -> SNode:
    match e:
        case ELit(value=None):
            return sym("unit")
        case ELit(value=bool() as b):
            return sym("true" if b else "false")
        case ELit(value=int() as n):
            return SInt(n)
        case ELit(value=str() as s):
            return SStr(s)
        case ETag(name=name):
            return slist(sym("tag"), sym(name))
        case ENothing():
            return sym("nothing")
        case EVar(name=name):
            return sym(name)
        case EPath(root=root, fields=fields):
            return sym(".".join((root,) + tuple(fields)))
        case EJust(expr=inner):
            return slist(sym("just"), expr_to_sexpr(inner))
        case ELeft(expr=inner):
            return slist(sym("left"), expr_to_sexpr(inner))
        case ERight(expr=inner):
            return slist(sym("right"), expr_to_sexpr(inner))
        case ESeq(items=items):
            return slist(sym("seq"), *(expr_to_sexpr(i) for i in items))
        case ERecord(fields=fields):
            return slist(sym("record"), *(slist(sym(n), expr_to_sexpr(v)) for n, v in fields))
        case EArith(op=op, left=left, right=right):
            return slist(sym(op), expr_to_sexpr(left), expr_to_sexpr(right))
        case ECmp(op=op, left=left, right=right):
            return slist(sym(op), expr_to_sexpr(left), expr_to_sexpr(right))
        case EBoolOp(op=op, args=args):
            return slist(sym(op), *(expr_to_sexpr(a) for a in args))
        case ENot(expr=inner):
            return slist(sym("not"), expr_to_sexpr(inner))
        case ETest(op=op, expr=inner):
            return slist(sym(op), expr_to_sexpr(inner))
        case ELen(expr=inner):
            return slist(sym("len"), expr_to_sexpr(inner))
        case ENth(seq=seq, index=index):
            return slist(sym("nth"), expr_to_sexpr(seq), expr_to_sexpr(index))
        case EGuard(branches=branches, otherwise=otherwise):
            clauses = [slist(expr_to_sexpr(c), expr_to_sexpr(r)) for c, r in branches]
            if otherwise is not None:
                clauses.append(slist(sym("otherwise"), expr_to_sexpr(otherwise)))
            return slist(sym("guard"), *clauses)
        case _:
            raise TypeError(f"not an expression node: {type(e).__name__}")


def prog_to_sexpr(p: Prog) -> SNode:
    match p:
        case PReturn(expr=e):
            return slist(sym("return"), expr_to_sexpr(e))
        case PBind(inner=inner, var=var, body=body):
            return slist(sym("bind"), prog_to_sexpr(inner), slist(sym(var), prog_to_sexpr(body)))
        case PBail(expr=e):
            return slist(sym("bail"), expr_to_sexpr(e))
        case PIfGuards(branches=branches, otherwise=otherwise):
            clauses = [slist(expr_to_sexpr(c), prog_to_sexpr(b)) for c, b in branches]
            if otherwise is not None:
                clauses.append(slist(sym("otherwise"), prog_to_sexpr(otherwise)))
            return slist(sym("if-guards"), *clauses)
        case PCaseEither(scrutinee=s, left_var=lv, left_body=lb, right_var=rv, right_body=rb):
            return slist(
                sym("case-either"),
                expr_to_sexpr(s),
                slist(sym(lv), prog_to_sexpr(lb)),
                slist(sym(rv), prog_to_sexpr(rb)),
            )
        case PCaseMaybe(scrutinee=s, nothing_body=nb, just_var=jv, just_body=jb):
            return slist(
                sym("case-maybe"),
                expr_to_sexpr(s),
                prog_to_sexpr(nb),
                slist(sym(jv), prog_to_sexpr(jb)),
            )
        case PGets(expr=e):
            return slist(sym("gets"), expr_to_sexpr(e))
        case PPut(expr=e):
            return slist(sym("put"), expr_to_sexpr(e))
        case PAsk():
            return slist(sym("ask"))
        case PTell(exprs=es):
            return slist(sym("tell"), *(expr_to_sexpr(e) for e in es))
        case PUse(path=path):
            return slist(sym("use"), sym(".".join(path)))
        case PAssign(path=path, expr=e):
            return slist(sym("assign"), sym(".".join(path)), expr_to_sexpr(e))
        case PModifying(path=path, expr=e):
            return slist(sym("modifying"), sym(".".join(path)), expr_to_sexpr(e))
        case PName(name=name):
            return sym(name)
        case _:
            raise TypeError(f"not a program node: {type(p).__name__}")


def print_program(pf: ProgramFile) -> str:
    """Render a program file; the result reparses to an equal ProgramFile."""
    lines = [f"(program {pf.kind}"]
    for decl, shape in (
        ("state", pf.state_shape),
        ("env", pf.env_shape),
        ("output", pf.output_shape),
        ("error", pf.error_shape),
    ):
        if shape is not None:
            lines.append("  " + write_sexpr(slist(sym(decl), shape_to_sexpr(shape))))
    for name, prog in pf.defines:
        lines.append("  " + write_sexpr(slist(sym("define"), sym(name), prog_to_sexpr(prog))))
    for name, expr in pf.posts:
        lines.append("  " + write_sexpr(slist(sym("post"), sym(name), expr_to_sexpr(expr))))
    lines.append("  " + write_sexpr(slist(sym("entry"), prog_to_sexpr(pf.entry))))
    return "\n".join(lines) + ")\n"
