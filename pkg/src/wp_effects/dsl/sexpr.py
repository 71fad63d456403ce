"""S-expression reader and writer with line/column tracking.

Atoms are symbols, signed integer literals, and double-quoted strings;
`;` starts a comment running to end of line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator


@dataclass(frozen=True)
class SourcePos:
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


_NOWHERE = SourcePos(0, 0)


@dataclass(frozen=True)
class SSym:
    name: str
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class SInt:
    value: int
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class SStr:
    value: str
    pos: SourcePos = field(default=_NOWHERE, compare=False)


@dataclass(frozen=True)
class SList:
    items: tuple
    pos: SourcePos = field(default=_NOWHERE, compare=False)


SNode = SSym | SInt | SStr | SList


class SexprError(Exception):
    def __init__(self, message: str, pos: SourcePos):
        super().__init__(f"{pos}: {message}")
        self.message = message
        self.pos = pos


_DELIMS = set("()\";") | set(" \t\r\n")

_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}
_UNESCAPES = {"\n": "\\n", "\t": "\\t", '"': '\\"', "\\": "\\\\"}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.line = 1
        self.col = 1

    def pos(self) -> SourcePos:
        return SourcePos(self.line, self.col)

    def peek(self) -> str | None:
        return self.text[self.i] if self.i < len(self.text) else None

    def advance(self) -> str:
        c = self.text[self.i]
        self.i += 1
        if c == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return c

    def skip_blank(self) -> None:
        while True:
            c = self.peek()
            if c is None:
                return
            if c in " \t\r\n":
                self.advance()
            elif c == ";":
                while self.peek() not in (None, "\n"):
                    self.advance()
            else:
                return


def _scan_string(sc: _Scanner) -> SStr:
    start = sc.pos()
    sc.advance()  # opening quote
    chars: list[str] = []
    while True:
        c = sc.peek()
        if c is None:
            raise SexprError("unterminated string literal", start)
        if c == '"':
            sc.advance()
            return SStr("".join(chars), start)
        if c == "\\":
            sc.advance()
            esc = sc.peek()
            if esc is None or esc not in _ESCAPES:
                raise SexprError(f"bad string escape: \\{esc}", sc.pos())
            chars.append(_ESCAPES[esc])
            sc.advance()
        else:
            chars.append(sc.advance())


def _scan_atom(sc: _Scanner) -> SNode:
    start = sc.pos()
    chars: list[str] = []
    while True:
        c = sc.peek()
        if c is None or c in _DELIMS:
            break
        chars.append(sc.advance())
    text = "".join(chars)
    body = text[1:] if text[:1] in "+-" else text
    if body.isdigit():
        return SInt(int(text), start)
    return SSym(text, start)


def _read(sc: _Scanner) -> SNode:
    sc.skip_blank()
    c = sc.peek()
    if c is None:
        raise SexprError("unexpected end of input", sc.pos())
    if c == "(":
        start = sc.pos()
        sc.advance()
        items: list[SNode] = []
        while True:
            sc.skip_blank()
            nxt = sc.peek()
            if nxt is None:
                raise SexprError("unexpected end of input: unclosed (", start)
            if nxt == ")":
                sc.advance()
                return SList(tuple(items), start)
            items.append(_read(sc))
    if c == ")":
        raise SexprError("unexpected )", sc.pos())
    if c == '"':
        return _scan_string(sc)
    return _scan_atom(sc)


def parse_sexprs(text: str) -> tuple[SNode, ...]:
    """Read every top-level form in `text`."""
    sc = _Scanner(text)
    forms: list[SNode] = []
    while True:
        sc.skip_blank()
        if sc.peek() is None:
            return tuple(forms)
        forms.append(_read(sc))


def write_sexpr(node: SNode) -> str:
    """Render a node on one line; reparses to an equal node."""
    match node:
        case SSym(name=name):
            return name
        case SInt(value=value):
            return str(value)
        case SStr(value=value):
            return '"' + "".join(_UNESCAPES.get(c, c) for c in value) + '"'
        case SList(items=items):
            return "(" + " ".join(write_sexpr(item) for item in items) + ")"
        case _:
            raise TypeError(f"not an s-expression node: {type(node).__name__}")


def sym(name: str) -> SSym:
    return SSym(name)


def slist(*items: Any) -> SList:
    return SList(tuple(items))
