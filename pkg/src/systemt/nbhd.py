"""Neighbourhood-function handles.

A neighbourhood function maps finite sequences to naturals: ``0`` means "more
input needed", ``n + 1`` means "the answer is n", and a positive value never
changes under extension.  A handle is backed either by a closed object-language
term of type ``Seq -> Nat`` or by a host function on tuples.
"""
from __future__ import annotations

from typing import Callable, Optional, Sequence

from .evaluator import Compiled, FuelExhausted
from .syntax import Arrow, NAT, SEQ, SystemTError, Term, TypeMismatch, typecheck


class HostBacked(SystemTError):
    """The neighbourhood function has no object-language term."""


class NbhFn:
    def __init__(self, host: Optional[Callable[[tuple], int]] = None, term: Optional[Term] = None,
                 fuel: Optional[int] = None, name: str = ""):
        if (host is None) == (term is None):
            raise ValueError("give exactly one of host= or term=")
        self.term = term
        self.fuel = fuel
        self.name = name
        if term is not None:
            ty = typecheck([], term)
            if ty != Arrow(SEQ, NAT):
                raise TypeMismatch(Arrow(SEQ, NAT), ty, "neighbourhood term")
            compiled = Compiled(term)
            self._fn = lambda a: compiled(a, fuel=self.fuel)
        else:
            self._fn = host

    @classmethod
    def from_term(cls, term: Term, fuel: Optional[int] = None, name: str = "") -> "NbhFn":
        return cls(term=term, fuel=fuel, name=name)

    @classmethod
    def from_host(cls, fn: Callable[[tuple], int], name: str = "") -> "NbhFn":
        return cls(host=fn, name=name)

    @property
    def term_backed(self) -> bool:
        return self.term is not None

    def query(self, a: Sequence[int]) -> int:
        return self._fn(tuple(a))

    __call__ = query

    def query_raw(self, a) -> int:
        """Query with an already-built runtime sequence (e.g. a PartialSeq)."""
        return self._fn(a)

    def secured_at(self, alpha: Callable[[int], int], fuel: int = 10_000) -> int:
        """Least ``n <= fuel`` with ``query(alpha-bar n) > 0``."""
        prefix: list = []
        for n in range(fuel + 1):
            if self._fn(tuple(prefix)) > 0:
                return n
            prefix.append(alpha(n))
        raise FuelExhausted(f"no secured prefix of length <= {fuel}")

    def induced(self, alpha: Callable[[int], int], fuel: int = 10_000) -> int:
        """The value this neighbourhood function assigns to ``alpha``."""
        n = self.secured_at(alpha, fuel)
        return self._fn(tuple(alpha(i) for i in range(n))) - 1

    def __repr__(self):
        kind = "term" if self.term_backed else "host"
        return f"NbhFn({kind}{', ' + self.name if self.name else ''})"
