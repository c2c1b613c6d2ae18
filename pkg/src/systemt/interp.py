"""Non-standard interpretation of terms over a structure (TN, eta, KE, At).

Given a base type ``TN`` with ``eta : N -> TN``, ``ke : (N -> TN) -> TN -> TN``
and ``at : N -> TN``, every Omega-term is interpreted in the type structure
over ``TN``: ``Nat`` becomes ``TN`` and arrows become host functions.  The
constants are read as

    0      ~> eta(0)
    Succ   ~> KE(x -> eta(x + 1))
    Omega  ~> gen = KE(At)
    Rec_r  ~> u -> F -> KE_r(n -> Rec(u, x -> F(eta x))(n))

with ``KE`` lifted to higher types by ``KE_{r->s}(f)(u)(v) = KE_s(x -> f(x)(v))(u)``.

Two concrete structures live here: the point-wise continuous model (TN =
functions of the oracle) and the host-level neighbourhood-function model.
Dialogue trees and Brouwer operations provide their own.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .syntax import (
    App, Arrow, Lam, Nat, Omega, Rec, Succ, SystemTError, Term, Type, Var, Zero,
)


class SeqInSource(SystemTError):
    """A source-language term or type mentions the sequence type."""


@dataclass(frozen=True)
class Structure:
    name: str
    eta: Callable[[int], Any]
    ke: Callable[[Callable[[int], Any]], Callable[[Any], Any]]
    at: Callable[[int], Any]

    def gen(self):
        return self.ke(self.at)

    def ke_at(self, ty: Type) -> Callable:
        """Kleisli extension at an arbitrary source type."""
        if isinstance(ty, Nat):
            return self.ke
        if isinstance(ty, Arrow):
            ke_cod = self.ke_at(ty.cod)

            def ke_arrow(f):
                def lifted(u):
                    return lambda v: ke_cod(lambda x: f(x)(v))(u)
                return lifted
            return ke_arrow
        raise SeqInSource(f"type {ty} is not a source type")


def interpret(t: Term, s: Structure, env: Sequence = ()) -> Any:
    """Interpret ``t`` in the type structure over ``s``; ``env`` is indexed by level."""
    return _interp(t, s, tuple(env))


def _interp(t: Term, s: Structure, env: tuple) -> Any:
    if isinstance(t, Var):
        return env[t.index]
    if isinstance(t, Lam):
        body = t.body
        return lambda v: _interp(body, s, env + (v,))
    if isinstance(t, App):
        f = _interp(t.fn, s, env)
        return f(_interp(t.arg, s, env))
    if isinstance(t, Zero):
        return s.eta(0)
    if isinstance(t, Succ):
        return s.ke(lambda x: s.eta(x + 1))
    if isinstance(t, Omega):
        return s.gen()
    if isinstance(t, Rec):
        ke_r = s.ke_at(t.at)

        def rec_dagger(u):
            def with_step(F):
                def iterate(n):
                    acc = u
                    for k in range(n):
                        acc = F(s.eta(k))(acc)
                    return acc
                return ke_r(iterate)
            return with_step
        return rec_dagger
    raise SeqInSource(f"{type(t).__name__} has no non-standard interpretation")


# ---------------------------------------------------------------- continuous model
# TN = functions of the oracle; a value is read back by applying it.

CONTINUOUS = Structure(
    name="continuous",
    eta=lambda n: (lambda alpha: n),
    ke=lambda f: (lambda g: (lambda alpha: f(g(alpha))(alpha))),
    at=lambda n: (lambda alpha: alpha(n)),
)


# ---------------------------------------------------------------- neighbourhood model
# TN = host functions on finite sequences (tuples).

def _nbhd_ke(f):
    def lifted(g):
        def delta(a):
            c = g(a)
            return f(c - 1)(a) if c > 0 else 0
        return delta
    return lifted


def _nbhd_at(n):
    return lambda a: a[n] + 1 if len(a) > n else 0


NEIGHBOURHOOD = Structure(
    name="neighbourhood",
    eta=lambda n: (lambda a: n + 1),
    ke=_nbhd_ke,
    at=_nbhd_at,
)
