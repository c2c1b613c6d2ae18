"""The dagger pass: System T terms over Nat into terms over ``Seq -> Nat``.

``Nat`` is translated to ``Seq -> Nat`` and arrows pointwise.  Constants are
replaced by closed terms built from the neighbourhood-function structure

    eta  = \\x. \\a. Succ x
    KE   = \\f. \\g. \\a. sg (g a) * f (g a - 1) a
    At   = \\n. \\a. 0 if len a <= n else Succ (get a n)

whose arithmetic (sg, cut-off minus, multiplication, the length test) is
spelled out with ``Rec`` and inlined at each use.  For a closed
``Y : (Nat->Nat)->Nat`` the translation of ``Y Omega`` is a closed
``Seq -> Nat`` term: a neighbourhood function of ``Y``.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .interp import SeqInSource
from .nbhd import HostBacked, NbhFn
from .syntax import (
    App, Arrow, EmptySeq, Get, Lam, Len, NAT, Nat, Omega, Rec, SEQ, Snoc, Succ, Term, Type,
    Var, Zero, contains_seq, parse_term, pretty, require_functional, shift, typecheck,
)


def dagger_type(ty: Type) -> Type:
    if isinstance(ty, Nat):
        return Arrow(SEQ, NAT)
    if isinstance(ty, Arrow):
        return Arrow(dagger_type(ty.dom), dagger_type(ty.cod))
    raise SeqInSource(f"type {ty} mentions Seq")


# ---------------------------------------------------------------- arithmetic macros

_MACROS: dict = {}


def _define(name: str, source: str) -> Term:
    t = parse_term(source, _MACROS)
    typecheck([], t)
    _MACROS[name] = t
    return t


SG = _define("sg", r"\x:Nat. Rec[Nat] 0 (\k:Nat. \r:Nat. 1) x")
PRED = _define("pred", r"\x:Nat. Rec[Nat] 0 (\k:Nat. \r:Nat. k) x")
MONUS = _define("monus", r"\x:Nat. \y:Nat. Rec[Nat] x (\k:Nat. \r:Nat. pred r) y")
PLUS = _define("plus", r"\x:Nat. \y:Nat. Rec[Nat] x (\k:Nat. \r:Nat. Succ r) y")
MULT = _define("mult", r"\x:Nat. \y:Nat. Rec[Nat] 0 (\k:Nat. \r:Nat. plus r y) x")

ETA = _define("eta", r"\x:Nat. \a:Seq. Succ x")
KE_NAT = _define(
    "ke",
    r"\f:Nat->Seq->Nat. \g:Seq->Nat. \a:Seq. (\c:Nat. mult (sg c) (f (monus c 1) a)) (g a)",
)
# len a <= n iff monus (len a) n = 0; the Rec step (reading a_n) only runs otherwise
AT = _define(
    "at",
    r"\n:Nat. \a:Seq. Rec[Nat] 0 (\k:Nat. \r:Nat. Succ (get a n)) (monus (len a) n)",
)
GEN = _define("gen", r"ke (\x:Nat. at x)")


def eta_term() -> Term:
    return ETA


def at_term() -> Term:
    return AT


def ke_nat_term() -> Term:
    return KE_NAT


def gen_term() -> Term:
    return GEN


def macro(name: str) -> Term:
    return _MACROS[name]


# ---------------------------------------------------------------- higher-order builders
# A builder maps the binder depth it is placed at to a term; ``lam`` hands its
# body a builder for the bound variable.

Builder = Callable[[int], Term]


def _closed(t: Term) -> Builder:
    return lambda d: shift(t, d)


def _lam(ty: Type, body: Callable[[Builder], Builder]) -> Builder:
    def build(d: int) -> Term:
        level = d
        return Lam(ty, body(lambda _d: Var(level))(d + 1))
    return build


def _app(f: Builder, *args: Builder) -> Builder:
    def build(d: int) -> Term:
        t = f(d)
        for a in args:
            t = App(t, a(d))
        return t
    return build


_KE_CACHE: dict = {}


def ke_at_type(ty: Type) -> Term:
    """``KE_ty : (Nat -> ty+) -> Nat+ -> ty+`` where ``+`` is the dagger."""
    if ty in _KE_CACHE:
        return _KE_CACHE[ty]
    if isinstance(ty, Nat):
        t = KE_NAT
    elif isinstance(ty, Arrow):
        ke_cod = _closed(ke_at_type(ty.cod))
        t = _lam(Arrow(NAT, dagger_type(ty)), lambda f:
                 _lam(dagger_type(NAT), lambda u:
                      _lam(dagger_type(ty.dom), lambda v:
                           _app(ke_cod, _lam(NAT, lambda x: _app(f, x, v)), u))))(0)
    else:
        raise SeqInSource(f"type {ty} mentions Seq")
    _KE_CACHE[ty] = t
    return t


def rec_dagger(ty: Type) -> Term:
    """``\\u. \\F. KE_ty (Rec[ty+] u (\\x:Nat. F (eta x)))``."""
    ty_d = dagger_type(ty)
    ke = _closed(ke_at_type(ty))
    eta = _closed(ETA)
    return _lam(ty_d, lambda u:
                _lam(Arrow(dagger_type(NAT), Arrow(ty_d, ty_d)), lambda F:
                     _app(ke, _app(_closed(Rec(ty_d)), u,
                                   _lam(NAT, lambda x: _app(F, _app(eta, x)))))))(0)


def constant_dagger(t: Term) -> Term:
    if isinstance(t, Zero):
        return App(ETA, Zero())
    if isinstance(t, Succ):
        return parse_term(r"ke (\x:Nat. eta (Succ x))", _MACROS)
    if isinstance(t, Omega):
        return GEN
    if isinstance(t, Rec):
        return rec_dagger(t.at)
    if isinstance(t, (EmptySeq, Snoc, Len, Get)):
        raise SeqInSource(f"{type(t).__name__} is not a source-language constant")
    raise TypeError(f"not a constant: {t!r}")


_SUCC_DAGGER = constant_dagger(Succ())


def dagger_term(t: Term, ctx: Sequence[Type] = ()) -> Term:
    """Translate ``t`` (typed in ``ctx``) to a term typed in the translated context."""
    for ty in ctx:
        if contains_seq(ty):
            raise SeqInSource(f"context type {ty} mentions Seq")
    typecheck(ctx, t)
    return _dagger(t, len(ctx))


def _dagger(t: Term, d: int) -> Term:
    if isinstance(t, Var):
        return t
    if isinstance(t, Lam):
        return Lam(dagger_type(t.dom), _dagger(t.body, d + 1))
    if isinstance(t, App):
        return App(_dagger(t.fn, d), _dagger(t.arg, d))
    if isinstance(t, Succ):
        return shift(_SUCC_DAGGER, d)
    return shift(constant_dagger(t), d)


def neighbourhood_term(Y: Term, fuel=None) -> NbhFn:
    require_functional(Y)
    gamma = dagger_term(App(Y, Omega()))
    return NbhFn.from_term(gamma, fuel=fuel, name="dagger")


def emit_source(n: NbhFn) -> str:
    if not n.term_backed:
        raise HostBacked("this neighbourhood function is host-backed and has no term")
    return pretty(n.term)
