"""Types, terms, concrete syntax and typechecking for System T with finite sequences.

Variables are de Bruijn *levels*: ``Var(i)`` refers to the i-th binder counted
from the outside of the enclosing context.  The pretty printer names the
binder at level ``i`` ``x{i}``, so printed names are stable under nesting.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence, Union


class SystemTError(Exception):
    """Base class for errors raised by this package."""


class ParseError(SystemTError, SyntaxError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.msg_text = message
        self.line = line
        self.column = column


class UnknownIdentifier(ParseError):
    pass


class TypeMismatch(SystemTError):
    def __init__(self, expected, found, location: str):
        exp = pretty_type(expected) if isinstance(expected, TYPES) else str(expected)
        fnd = pretty_type(found) if isinstance(found, TYPES) else str(found)
        super().__init__(f"expected {exp}, found {fnd} in {location}")
        self.expected = expected
        self.found = found
        self.location = location


class UnboundVariable(SystemTError):
    pass


# ---------------------------------------------------------------- types


@dataclass(frozen=True)
class Nat:
    def __str__(self):
        return "Nat"


@dataclass(frozen=True)
class Seq:
    def __str__(self):
        return "Seq"


@dataclass(frozen=True)
class Arrow:
    dom: "Type"
    cod: "Type"

    def __str__(self):
        return pretty_type(self)


Type = Union[Nat, Seq, Arrow]
TYPES = (Nat, Seq, Arrow)

NAT = Nat()
SEQ = Seq()


def arrow(*tys: Type) -> Type:
    """Right-nested arrow: ``arrow(a, b, c) == Arrow(a, Arrow(b, c))``."""
    out = tys[-1]
    for ty in reversed(tys[:-1]):
        out = Arrow(ty, out)
    return out


def pretty_type(ty: Type) -> str:
    if isinstance(ty, Arrow):
        dom = pretty_type(ty.dom)
        if isinstance(ty.dom, Arrow):
            dom = f"({dom})"
        return f"{dom}->{pretty_type(ty.cod)}"
    return str(ty)


def contains_seq(ty: Type) -> bool:
    if isinstance(ty, Arrow):
        return contains_seq(ty.dom) or contains_seq(ty.cod)
    return isinstance(ty, Seq)


# ---------------------------------------------------------------- terms


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Lam:
    dom: Type
    body: "Term"


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Succ:
    pass


@dataclass(frozen=True)
class Rec:
    at: Type


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class EmptySeq:
    pass


@dataclass(frozen=True)
class Snoc:
    pass


@dataclass(frozen=True)
class Len:
    pass


@dataclass(frozen=True)
class Get:
    pass


Term = Union[Var, Lam, App, Zero, Succ, Rec, Omega, EmptySeq, Snoc, Len, Get]
Context = Sequence[Type]

ZERO = Zero()
SUCC = Succ()
OMEGA = Omega()
EMPTY = EmptySeq()
SNOC = Snoc()
LEN = Len()
GET = Get()


def apps(fn: Term, *args: Term) -> Term:
    for a in args:
        fn = App(fn, a)
    return fn


def numeral(n: int) -> Term:
    t: Term = ZERO
    for _ in range(n):
        t = App(SUCC, t)
    return t


def subterms(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        s = stack.pop()
        yield s
        if isinstance(s, Lam):
            stack.append(s.body)
        elif isinstance(s, App):
            stack.append(s.arg)
            stack.append(s.fn)


def contains_omega(t: Term) -> bool:
    return any(isinstance(s, Omega) for s in subterms(t))


def size(t: Term) -> int:
    return sum(1 for _ in subterms(t))


def depth(t: Term) -> int:
    best = 0
    stack = [(t, 1)]
    while stack:
        s, d = stack.pop()
        best = max(best, d)
        if isinstance(s, Lam):
            stack.append((s.body, d + 1))
        elif isinstance(s, App):
            stack.append((s.fn, d + 1))
            stack.append((s.arg, d + 1))
    return best


def shift(t: Term, by: int, cutoff: int = 0) -> Term:
    """Add ``by`` to every variable level ``>= cutoff``.

    Placing a closed term under ``k`` binders is ``shift(t, k)``.
    """
    if by == 0:
        return t
    if isinstance(t, Var):
        return Var(t.index + by) if t.index >= cutoff else t
    if isinstance(t, Lam):
        return Lam(t.dom, shift(t.body, by, cutoff))
    if isinstance(t, App):
        return App(shift(t.fn, by, cutoff), shift(t.arg, by, cutoff))
    return t


def substitute(t: Term, level: int, closed: Term) -> Term:
    """Replace ``Var(level)`` by the closed term ``closed``.

    ``level`` must be the last entry of the context ``t`` lives in; binders
    inside ``t`` above ``level`` drop by one level.
    """

    def go(s: Term, depth: int) -> Term:
        if isinstance(s, Var):
            if s.index == level:
                return shift(closed, depth - 1)
            if s.index > level:
                return Var(s.index - 1)
            return s
        if isinstance(s, Lam):
            return Lam(s.dom, go(s.body, depth + 1))
        if isinstance(s, App):
            return App(go(s.fn, depth), go(s.arg, depth))
        return s

    return go(t, level + 1)


# ---------------------------------------------------------------- typing


def constant_type(t: Term) -> Optional[Type]:
    if isinstance(t, Zero):
        return NAT
    if isinstance(t, Succ):
        return Arrow(NAT, NAT)
    if isinstance(t, Rec):
        r = t.at
        return arrow(r, arrow(NAT, r, r), NAT, r)
    if isinstance(t, Omega):
        return Arrow(NAT, NAT)
    if isinstance(t, EmptySeq):
        return SEQ
    if isinstance(t, Snoc):
        return arrow(SEQ, NAT, SEQ)
    if isinstance(t, Len):
        return Arrow(SEQ, NAT)
    if isinstance(t, Get):
        return arrow(SEQ, NAT, NAT)
    return None


def _check_type_wf(ty: Type) -> None:
    if not isinstance(ty, TYPES):
        raise SystemTError(f"not a type: {ty!r}")
    if isinstance(ty, Arrow):
        _check_type_wf(ty.dom)
        _check_type_wf(ty.cod)


def _where(t: Term) -> str:
    text = pretty(t) if _well_formed_for_pretty(t) else repr(t)
    return text if len(text) <= 80 else text[:77] + "..."


def _well_formed_for_pretty(t: Term) -> bool:
    return all(isinstance(s, (Var, Lam, App, Zero, Succ, Rec, Omega, EmptySeq, Snoc, Len, Get))
               for s in subterms(t))


def typecheck(ctx: Context, t: Term) -> Type:
    return _typecheck(list(ctx), t)


def _typecheck(ctx: list, t: Term) -> Type:
    if isinstance(t, Var):
        if not 0 <= t.index < len(ctx):
            raise UnboundVariable(f"variable level {t.index} in a context of length {len(ctx)}")
        return ctx[t.index]
    if isinstance(t, Lam):
        _check_type_wf(t.dom)
        ctx.append(t.dom)
        try:
            cod = _typecheck(ctx, t.body)
        finally:
            ctx.pop()
        return Arrow(t.dom, cod)
    if isinstance(t, App):
        fty = _typecheck(ctx, t.fn)
        aty = _typecheck(ctx, t.arg)
        if not isinstance(fty, Arrow):
            raise TypeMismatch("a function type", fty, _where(t))
        if fty.dom != aty:
            raise TypeMismatch(fty.dom, aty, _where(t))
        return fty.cod
    if isinstance(t, Rec):
        _check_type_wf(t.at)
    ty = constant_type(t)
    if ty is None:
        raise SystemTError(f"not a term: {t!r}")
    return ty


# ---------------------------------------------------------------- pretty printing


def pretty(t: Term) -> str:
    return _pretty(t, 0)


def _pretty(t: Term, depth: int) -> str:
    if isinstance(t, Lam):
        return f"\\x{depth}:{pretty_type(t.dom)}. {_pretty(t.body, depth + 1)}"
    if isinstance(t, App):
        head, args = t, []
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fn
        args.reverse()
        parts = [_pretty_atom(head, depth)] + [_pretty_atom(a, depth) for a in args]
        return " ".join(parts)
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Succ):
        return "Succ"
    if isinstance(t, Rec):
        return f"Rec[{pretty_type(t.at)}]"
    if isinstance(t, Omega):
        return "Omega"
    if isinstance(t, EmptySeq):
        return "empty"
    if isinstance(t, Snoc):
        return "snoc"
    if isinstance(t, Len):
        return "len"
    if isinstance(t, Get):
        return "get"
    raise SystemTError(f"not a term: {t!r}")


def _pretty_atom(t: Term, depth: int) -> str:
    s = _pretty(t, depth)
    return f"({s})" if isinstance(t, (Lam, App)) else s


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>--[^\n]*)
  | (?P<arrow>->)
  | (?P<num>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>[\\λ:.()\[\]])
    """,
    re.VERBOSE,
)

KEYWORDS = {"Nat", "Seq", "Succ", "Rec", "Omega", "empty", "snoc", "len", "get"}
_CONSTANTS = {"Succ": SUCC, "Omega": OMEGA, "empty": EMPTY, "snoc": SNOC, "len": LEN, "get": GET}


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list:
    toks = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                if kind == "sym" and s == "λ":
                    s = "\\"
                toks.append(_Tok(kind, s, line, col))
            col += len(s)
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str, defs: Mapping[str, Term]):
        self.toks = _tokenize(text)
        self.i = 0
        self.scope: list = []
        self.defs = defs

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: Optional[_Tok] = None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        tok = self.tok
        if tok.text != text or tok.kind == "eof":
            shown = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {shown!r}")
        self.i += 1
        return tok

    def parse_type(self) -> Type:
        dom = self.parse_type_atom()
        if self.tok.kind == "arrow":
            self.i += 1
            return Arrow(dom, self.parse_type())
        return dom

    def parse_type_atom(self) -> Type:
        tok = self.tok
        if tok.text == "Nat":
            self.i += 1
            return NAT
        if tok.text == "Seq":
            self.i += 1
            return SEQ
        if tok.text == "(":
            self.i += 1
            ty = self.parse_type()
            self.expect(")")
            return ty
        raise self.error(f"expected a type, found {tok.text or 'end of input'!r}")

    def parse_term(self) -> Term:
        if self.tok.text == "\\":
            return self.parse_lambda()
        head = self.parse_atom()
        if head is None:
            raise self.error(f"expected a term, found {self.tok.text or 'end of input'!r}")
        while True:
            if self.tok.text == "\\":
                # a trailing lambda extends as far right as possible
                return App(head, self.parse_lambda())
            arg = self.parse_atom()
            if arg is None:
                return head
            head = App(head, arg)

    def parse_lambda(self) -> Term:
        self.expect("\\")
        tok = self.tok
        if tok.kind != "ident":
            raise self.error("expected a binder name")
        if tok.text in KEYWORDS:
            raise self.error(f"{tok.text!r} is reserved and cannot be bound")
        self.i += 1
        self.expect(":")
        ty = self.parse_type()
        self.expect(".")
        self.scope.append(tok.text)
        try:
            body = self.parse_term()
        finally:
            self.scope.pop()
        return Lam(ty, body)

    def parse_atom(self) -> Optional[Term]:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return numeral(int(tok.text))
        if tok.text == "(":
            self.i += 1
            t = self.parse_term()
            self.expect(")")
            return t
        if tok.kind != "ident":
            return None
        self.i += 1
        name = tok.text
        if name == "Rec":
            self.expect("[")
            ty = self.parse_type()
            self.expect("]")
            return Rec(ty)
        if name in _CONSTANTS:
            return _CONSTANTS[name]
        if name in ("Nat", "Seq"):
            raise self.error(f"type {name!r} used as a term", tok)
        for level in range(len(self.scope) - 1, -1, -1):
            if self.scope[level] == name:
                return Var(level)
        if name in self.defs:
            return shift(self.defs[name], len(self.scope))
        raise UnknownIdentifier(f"unknown identifier {name!r}", tok.line, tok.col)


def parse_term(text: str, defs: Optional[Mapping[str, Term]] = None) -> Term:
    """Parse a term.  ``defs`` maps extra names to closed terms, inlined at use."""
    p = _Parser(text, defs or {})
    t = p.parse_term()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return t


def parse_type(text: str) -> Type:
    p = _Parser(text, {})
    ty = p.parse_type()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    return ty


FUNCTIONAL = Arrow(Arrow(NAT, NAT), NAT)


def require_functional(Y: Term) -> None:
    """Check that ``Y`` is a closed, Omega-free term of type (Nat->Nat)->Nat."""
    ty = typecheck([], Y)
    if ty != FUNCTIONAL:
        raise TypeMismatch(FUNCTIONAL, ty, _where(Y))
    if contains_omega(Y):
        raise SystemTError("the functional must not mention Omega")
