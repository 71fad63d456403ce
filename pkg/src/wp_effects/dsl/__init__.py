"""Textual surface language for effect programs: s-expression syntax, shape
checking, and compilation to the effect trees of the core library."""

from .runtime import (
    CompileContext,
    DslRunError,
    LiteralError,
    Tag,
    compile_post,
    compile_prog,
    compile_program,
    eval_expr,
    parse_value_literal,
    value_to_jsonable,
    value_to_text,
)
from .sexpr import SexprError, SourcePos, parse_sexprs, write_sexpr
from .syntax import (
    INT_MAX,
    INT_MIN,
    ParseError,
    ProgramFile,
    parse_program,
    print_program,
    shape_str,
)
from .typecheck import CheckedProgram, Diagnostic, DslTypeError, typecheck

__all__ = [
    "CheckedProgram",
    "CompileContext",
    "Diagnostic",
    "DslRunError",
    "DslTypeError",
    "INT_MAX",
    "INT_MIN",
    "LiteralError",
    "ParseError",
    "ProgramFile",
    "SexprError",
    "SourcePos",
    "Tag",
    "compile_post",
    "compile_prog",
    "compile_program",
    "eval_expr",
    "parse_program",
    "parse_sexprs",
    "parse_value_literal",
    "print_program",
    "shape_str",
    "typecheck",
    "value_to_jsonable",
    "value_to_text",
    "write_sexpr",
]
