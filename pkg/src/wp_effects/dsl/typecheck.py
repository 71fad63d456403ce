"""Shape checking for program files.

Verifies that lens paths resolve against the declared state record, guard
chains end in otherwise, tell payloads match the output shape, ordering
comparisons only see ordered shapes, integer literals fit the bounded range,
and definition references are acyclic. Diagnostics carry a position and,
where it helps, the expected and actual shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .sexpr import SourcePos
from .syntax import (
    BOOL,
    BOTTOM,
    INT,
    INT_MAX,
    INT_MIN,
    STR,
    TAG,
    UNIT,
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
    PReturn,
    ProgramFile,
    PTell,
    PUse,
    RecordShape,
    SeqShape,
    Shape,
    is_ordered_shape,
    record_field,
    shape_str,
    unify,
)


@dataclass(frozen=True)
class Diagnostic:
    message: str
    pos: SourcePos
    expected: str | None = None
    actual: str | None = None

    def __str__(self) -> str:
        text = f"{self.pos}: {self.message}"
        if self.expected is not None or self.actual is not None:
            text += f" (expected {self.expected}, got {self.actual})"
        return text


class DslTypeError(Exception):
    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


@dataclass
class CheckedProgram:
    file: ProgramFile
    result_shape: Shape
    define_shapes: dict


class _Abort(Exception):
    def __init__(self, diagnostic: Diagnostic):
        self.diagnostic = diagnostic


def typecheck(pf: ProgramFile) -> CheckedProgram:
    """Check a parsed file; raises DslTypeError carrying every diagnostic."""
    checker = _Checker(pf)
    checked = checker.check()
    if checker.diagnostics:
        raise DslTypeError(checker.diagnostics)
    return checked


class _Checker:
    def __init__(self, pf: ProgramFile):
        self.pf = pf
        self.diagnostics: list[Diagnostic] = []
        self.define_map = dict(pf.defines)
        self.define_shapes: dict[str, Shape] = {}
        self._checking: list[str] = []

    def check(self) -> CheckedProgram:
        pf = self.pf
        if pf.kind == "rws" and pf.state_shape is None:
            self._report(Diagnostic("an rws program needs a (state shape) declaration", _file_pos(pf)))
        for decl, shape in (("state", pf.state_shape), ("env", pf.env_shape), ("output", pf.output_shape)):
            if pf.kind == "either" and shape is not None:
                self._report(Diagnostic(f"({decl} ...) declarations only apply to rws programs", _file_pos(pf)))
        if pf.kind == "rws" and pf.error_shape is not None:
            self._report(Diagnostic("(error ...) declarations only apply to either programs", _file_pos(pf)))

        for name, _prog in pf.defines:
            self._define_shape(name)

        result = BOTTOM
        try:
            result = self.infer_prog(pf.entry, {})
        except _Abort as exc:
            self._report(exc.diagnostic)

        for _name, expr in pf.posts:
            try:
                shape = self.infer_expr(expr, self._post_env(result))
                self._expect(BOOL, shape, _expr_pos(expr), "postcondition")
            except _Abort as exc:
                self._report(exc.diagnostic)

        return CheckedProgram(pf, result, dict(self.define_shapes))

    # -- helpers

    def _report(self, d: Diagnostic) -> None:
        self.diagnostics.append(d)

    def _expect(self, expected: Shape, actual: Shape, pos: SourcePos, what: str) -> Shape:
        merged = unify(expected, actual)
        if merged is None:
            raise _Abort(
                Diagnostic(f"{what} has the wrong shape", pos, shape_str(expected), shape_str(actual))
            )
        return merged

    def _env_shape(self) -> Shape:
        return self.pf.env_shape if self.pf.env_shape is not None else UNIT

    def _post_env(self, result: Shape) -> dict[str, Shape]:
        if self.pf.kind == "either":
            return {"result": EitherShape(self.pf.error_shape or BOTTOM, result)}
        return {
            "result": result,
            "post-state": self.pf.state_shape or BOTTOM,
            "outputs": SeqShape(self.pf.output_shape or BOTTOM),
        }

    def _define_shape(self, name: str) -> Shape:
        if name in self.define_shapes:
            return self.define_shapes[name]
        if name in self._checking:
            cycle = " -> ".join(self._checking + [name])
            raise _Abort(Diagnostic(f"recursive definition: {cycle}", _prog_pos(self.define_map[name])))
        self._checking.append(name)
        try:
            shape = self.infer_prog(self.define_map[name], {})
            self.define_shapes[name] = shape
            return shape
        except _Abort as exc:
            # Record once, treat the definition as bottom so later uses check.
            self.define_shapes[name] = BOTTOM
            self._report(exc.diagnostic)
            return BOTTOM
        finally:
            self._checking.pop()

    def _state_path_shape(self, path: tuple, pos: SourcePos) -> Shape:
        if path[0] != "state":
            raise _Abort(Diagnostic(f"lens paths start at state, not {path[0]}", pos))
        if self.pf.state_shape is None:
            raise _Abort(Diagnostic("no state shape declared", pos))
        shape = self.pf.state_shape
        for name in path[1:]:
            nxt = record_field(shape, name)
            if nxt is None:
                raise _Abort(Diagnostic(f"unknown field {name}", pos, "a record field", shape_str(shape)))
            shape = nxt
        return shape

    def _require_rws(self, what: str, pos: SourcePos) -> None:
        if self.pf.kind != "rws":
            raise _Abort(Diagnostic(f"{what} is only available in rws programs", pos))

    # -- programs

    def infer_prog(self, p: Any, env: dict[str, Shape]) -> Shape:
        match p:
            case PReturn(expr=e):
                return self.infer_expr(e, env)
            case PBail(expr=e, pos=pos):
                if self.pf.kind != "either":
                    raise _Abort(Diagnostic("bail is only available in either programs", pos))
                shape = self.infer_expr(e, env)
                self._expect(self.pf.error_shape or BOTTOM, shape, pos, "bail payload")
                return BOTTOM
            case PBind(inner=inner, var=var, body=body):
                inner_shape = self.infer_prog(inner, env)
                return self.infer_prog(body, {**env, var: inner_shape})
            case PIfGuards(branches=branches, otherwise=otherwise, pos=pos):
                result: Shape = BOTTOM
                for cond, body in branches:
                    cond_shape = self.infer_expr(cond, env)
                    self._expect(BOOL, cond_shape, _expr_pos(cond), "guard condition")
                    result = self._join(result, self.infer_prog(body, env), pos)
                if otherwise is None:
                    raise _Abort(Diagnostic("guard chain must end in an otherwise clause (totality)", pos))
                return self._join(result, self.infer_prog(otherwise, env), pos)
            case PCaseEither(scrutinee=s, left_var=lv, left_body=lb, right_var=rv, right_body=rb, pos=pos):
                shape = self.infer_expr(s, env)
                shape = self._expect(EitherShape(BOTTOM, BOTTOM), shape, _expr_pos(s), "case-either scrutinee")
                left = self.infer_prog(lb, {**env, lv: shape.left})
                right = self.infer_prog(rb, {**env, rv: shape.right})
                return self._join(left, right, pos)
            case PCaseMaybe(scrutinee=s, nothing_body=nb, just_var=jv, just_body=jb, pos=pos):
                shape = self.infer_expr(s, env)
                shape = self._expect(MaybeShape(BOTTOM), shape, _expr_pos(s), "case-maybe scrutinee")
                nothing = self.infer_prog(nb, env)
                just = self.infer_prog(jb, {**env, jv: shape.elem})
                return self._join(nothing, just, pos)
            case PGets(expr=e, pos=pos):
                self._require_rws("gets", pos)
                return self.infer_expr(e, {**env, "state": self.pf.state_shape or BOTTOM})
            case PPut(expr=e, pos=pos):
                self._require_rws("put", pos)
                shape = self.infer_expr(e, env)
                self._expect(self.pf.state_shape or BOTTOM, shape, pos, "put payload")
                return UNIT
            case PAsk(pos=pos):
                self._require_rws("ask", pos)
                return self._env_shape()
            case PTell(exprs=es, pos=pos):
                self._require_rws("tell", pos)
                if self.pf.output_shape is None and es:
                    raise _Abort(Diagnostic("tell needs an (output shape) declaration", pos))
                for e in es:
                    shape = self.infer_expr(e, env)
                    self._expect(self.pf.output_shape or BOTTOM, shape, _expr_pos(e), "tell output")
                return UNIT
            case PUse(path=path, pos=pos):
                self._require_rws("use", pos)
                return self._state_path_shape(path, pos)
            case PAssign(path=path, expr=e, pos=pos):
                self._require_rws("assign", pos)
                target = self._state_path_shape(path, pos)
                shape = self.infer_expr(e, env)
                self._expect(target, shape, pos, "assigned value")
                return UNIT
            case PModifying(path=path, expr=e, pos=pos):
                self._require_rws("modifying", pos)
                target = self._state_path_shape(path, pos)
                shape = self.infer_expr(e, {**env, "it": target})
                self._expect(target, shape, pos, "modified value")
                return UNIT
            case PName(name=name, pos=pos):
                if name not in self.define_map:
                    raise _Abort(Diagnostic(f"unknown definition: {name}", pos))
                if name in self._checking:
                    cycle = " -> ".join(self._checking + [name])
                    raise _Abort(Diagnostic(f"recursive definition: {cycle}", pos))
                return self._define_shape(name)
            case _:
                raise TypeError(f"not a surface program node: {type(p).__name__}")

    def _join(self, a: Shape, b: Shape, pos: SourcePos) -> Shape:
        merged = unify(a, b)
        if merged is None:
            raise _Abort(Diagnostic("branches produce different shapes", pos, shape_str(a), shape_str(b)))
        return merged

    # -- expressions

    def infer_expr(self, e: Any, env: dict[str, Shape]) -> Shape:
        match e:
            case ELit(value=None):
                return UNIT
            case ELit(value=bool()):
                return BOOL
            case ELit(value=int() as n, pos=pos):
                if not (INT_MIN <= n <= INT_MAX):
                    raise _Abort(Diagnostic(f"integer literal out of range: {n}", pos))
                return INT
            case ELit(value=str()):
                return STR
            case ETag():
                return TAG
            case ENothing():
                return MaybeShape(BOTTOM)
            case EVar(name=name, pos=pos):
                if name not in env:
                    raise _Abort(Diagnostic(f"unknown variable: {name}", pos))
                return env[name]
            case EPath(root=root, fields=fields, pos=pos):
                if root not in env:
                    raise _Abort(Diagnostic(f"unknown variable: {root}", pos))
                shape = env[root]
                for name in fields:
                    nxt = record_field(shape, name)
                    if nxt is None:
                        raise _Abort(Diagnostic(f"unknown field {name}", pos, "a record field", shape_str(shape)))
                    shape = nxt
                return shape
            case EJust(expr=inner):
                return MaybeShape(self.infer_expr(inner, env))
            case ELeft(expr=inner):
                return EitherShape(self.infer_expr(inner, env), BOTTOM)
            case ERight(expr=inner):
                return EitherShape(BOTTOM, self.infer_expr(inner, env))
            case ESeq(items=items, pos=pos):
                elem: Shape = BOTTOM
                for item in items:
                    elem = self._join(elem, self.infer_expr(item, env), pos)
                return SeqShape(elem)
            case ERecord(fields=fields):
                return RecordShape(tuple((n, self.infer_expr(v, env)) for n, v in fields))
            case EArith(left=left, right=right, pos=pos):
                self._expect(INT, self.infer_expr(left, env), _expr_pos(left), "arithmetic operand")
                self._expect(INT, self.infer_expr(right, env), _expr_pos(right), "arithmetic operand")
                return INT
            case ECmp(op=op, left=left, right=right, pos=pos):
                ls = self.infer_expr(left, env)
                rs = self.infer_expr(right, env)
                merged = unify(ls, rs)
                if merged is None:
                    raise _Abort(Diagnostic("comparison operands must share a shape", pos, shape_str(ls), shape_str(rs)))
                if op in ("<", "<=") and not is_ordered_shape(merged):
                    raise _Abort(Diagnostic(f"{op} needs an ordered shape (int or str)", pos, "int or str", shape_str(merged)))
                return BOOL
            case EBoolOp(args=args):
                for a in args:
                    self._expect(BOOL, self.infer_expr(a, env), _expr_pos(a), "boolean operand")
                return BOOL
            case ENot(expr=inner):
                self._expect(BOOL, self.infer_expr(inner, env), _expr_pos(inner), "boolean operand")
                return BOOL
            case ETest(op=op, expr=inner, pos=pos):
                shape = self.infer_expr(inner, env)
                if op == "is-nothing":
                    self._expect(MaybeShape(BOTTOM), shape, pos, "is-nothing operand")
                else:
                    self._expect(EitherShape(BOTTOM, BOTTOM), shape, pos, f"{op} operand")
                return BOOL
            case ELen(expr=inner, pos=pos):
                self._expect(SeqShape(BOTTOM), self.infer_expr(inner, env), pos, "len operand")
                return INT
            case ENth(seq=seq, index=index, pos=pos):
                shape = self._expect(SeqShape(BOTTOM), self.infer_expr(seq, env), pos, "nth operand")
                self._expect(INT, self.infer_expr(index, env), _expr_pos(index), "nth index")
                return shape.elem
            case EGuard(branches=branches, otherwise=otherwise, pos=pos):
                result: Shape = BOTTOM
                for cond, value in branches:
                    self._expect(BOOL, self.infer_expr(cond, env), _expr_pos(cond), "guard condition")
                    result = self._join(result, self.infer_expr(value, env), pos)
                if otherwise is None:
                    raise _Abort(Diagnostic("guard chain must end in an otherwise clause (totality)", pos))
                return self._join(result, self.infer_expr(otherwise, env), pos)
            case _:
                raise TypeError(f"not a surface expression node: {type(e).__name__}")


def _expr_pos(e: Any) -> SourcePos:
    return e.pos


def _prog_pos(p: Any) -> SourcePos:
    return p.pos


def _file_pos(pf: ProgramFile) -> SourcePos:
    return _prog_pos(pf.entry)
