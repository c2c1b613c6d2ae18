"""Standard call-by-value evaluator.

Terms are compiled once into Python closures over an environment tuple
(indexed by de Bruijn level) and a per-run :class:`Machine` that carries the
oracle bound to ``Omega``, the oracle trace and the step budget.

At runtime naturals are Python ints, sequences are tuples and functions are
one-argument Python callables.  :func:`evaluate` wraps results in
:class:`NatV` / :class:`SeqV` / :class:`FunV`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from .syntax import (
    App, EmptySeq, Get, Lam, Len, Omega, Rec, Snoc, Succ, SystemTError,
    Term, Var, Zero, contains_omega, require_functional, typecheck,
)

Oracle = Callable[[int], int]


class FuelExhausted(SystemTError):
    pass


class OracleMissing(SystemTError):
    pass


class UnknownEntry(SystemTError):
    """A :class:`PartialSeq` was asked for an entry it does not know."""

    def __init__(self, index):
        super().__init__(f"entry {index} is not known")
        self.index = index


# ---------------------------------------------------------------- values


@dataclass(frozen=True)
class NatV:
    n: int


@dataclass(frozen=True)
class SeqV:
    items: tuple


@dataclass(frozen=True)
class FunV:
    fn: Callable[[Any], Any] = field(compare=False)

    def apply(self, v: "Value") -> "Value":
        return to_value(self.fn(from_value(v)))


Value = Any  # NatV | SeqV | FunV


def to_value(raw) -> Value:
    if isinstance(raw, int):
        return NatV(raw)
    if isinstance(raw, tuple):
        return SeqV(raw)
    return FunV(raw)


def from_value(v: Value):
    if isinstance(v, NatV):
        return v.n
    if isinstance(v, SeqV):
        return tuple(v.items)
    if isinstance(v, FunV):
        return v.fn
    return v


class PartialSeq:
    """A sequence of a given length of which only a prefix is known.

    Reading past the known prefix (or extending it) raises
    :class:`UnknownEntry`; ``len`` reports the full length.
    """

    __slots__ = ("known", "length")

    def __init__(self, known: Sequence[int], length: int):
        if length < len(known):
            raise ValueError("length shorter than the known prefix")
        self.known = tuple(known)
        self.length = length

    def __len__(self):
        return self.length

    def __getitem__(self, i):
        if i < len(self.known):
            return self.known[i]
        raise UnknownEntry(i)

    def __add__(self, other):
        raise UnknownEntry(self.length)

    def __repr__(self):
        return f"PartialSeq({self.known!r}, length={self.length})"


# ---------------------------------------------------------------- traces


@dataclass
class OracleTrace:
    queries: list = field(default_factory=list)

    @property
    def indices(self) -> set:
        return {i for i, _ in self.queries}

    def as_partial_oracle(self) -> Oracle:
        """An oracle defined only on the traced indices (KeyError elsewhere)."""
        table = dict(self.queries)
        return table.__getitem__


class Machine:
    __slots__ = ("oracle", "trace", "steps", "limit")

    def __init__(self, oracle: Optional[Oracle] = None, fuel: Optional[int] = None, trace: bool = False):
        self.oracle = oracle
        self.trace = [] if trace else None
        self.steps = 0
        self.limit = float("inf") if fuel is None else fuel

    def tick(self):
        self.steps += 1
        if self.steps > self.limit:
            raise FuelExhausted(f"step budget of {self.limit} exhausted")

    def query(self, i: int) -> int:
        if self.oracle is None:
            raise OracleMissing("Omega evaluated without an oracle")
        ans = self.oracle(i)
        if not isinstance(ans, int) or ans < 0:
            raise ValueError(f"oracle returned {ans!r} at {i}; answers must be naturals")
        if self.trace is not None:
            self.trace.append((i, ans))
        return ans


# ---------------------------------------------------------------- compilation

Code = Callable[[tuple, Machine], Any]


def _succ(n):
    return n + 1


def _len(s):
    return len(s)


def _get(s):
    def at(n):
        return s[n] if n < len(s) else 0
    return at


def _snoc(s):
    def push(n):
        return s + (n,)
    return push


def _rec(m: Machine):
    def with_base(u):
        def with_step(f):
            def run(n):
                acc = u
                for k in range(n):
                    m.tick()
                    acc = f(k)(acc)
                return acc
            return run
        return with_step
    return with_base


def compile_term(t: Term) -> Code:
    if isinstance(t, Var):
        i = t.index
        return lambda env, m: env[i]
    if isinstance(t, Lam):
        body = compile_term(t.body)

        def lam(env, m):
            return lambda v: body(env + (v,), m)
        return lam
    if isinstance(t, App):
        cf = compile_term(t.fn)
        ca = compile_term(t.arg)

        def app(env, m):
            f = cf(env, m)
            x = ca(env, m)
            m.steps += 1
            if m.steps > m.limit:
                raise FuelExhausted(f"step budget of {m.limit} exhausted")
            return f(x)
        return app
    if isinstance(t, Zero):
        return lambda env, m: 0
    if isinstance(t, Succ):
        return lambda env, m: _succ
    if isinstance(t, Rec):
        return lambda env, m: _rec(m)
    if isinstance(t, Omega):
        return lambda env, m: m.query
    if isinstance(t, EmptySeq):
        return lambda env, m: ()
    if isinstance(t, Snoc):
        return lambda env, m: _snoc
    if isinstance(t, Len):
        return lambda env, m: _len
    if isinstance(t, Get):
        return lambda env, m: _get
    raise SystemTError(f"not a term: {t!r}")


class Compiled:
    """A closed term compiled once, runnable many times."""

    def __init__(self, t: Term):
        self.term = t
        self.needs_oracle = contains_omega(t)
        self._code = compile_term(t)

    def run(self, oracle: Optional[Oracle] = None, fuel: Optional[int] = None, trace: bool = False):
        if self.needs_oracle and oracle is None:
            raise OracleMissing("term mentions Omega but no oracle was given")
        m = Machine(oracle, fuel, trace)
        return self._code((), m), m

    def __call__(self, *args, oracle: Optional[Oracle] = None, fuel: Optional[int] = None):
        """Apply the compiled function to raw runtime arguments."""
        f, m = self.run(oracle, fuel)
        for a in args:
            m.tick()
            f = f(a)
        return f


def evaluate(t: Term, oracle: Optional[Oracle] = None, fuel: Optional[int] = None) -> Value:
    typecheck([], t)
    raw, _ = Compiled(t).run(oracle, fuel)
    return to_value(raw)


def eval_nat_traced(Y: Term, oracle: Oracle, fuel: Optional[int] = None):
    """Evaluate ``Y Omega`` against ``oracle``; return ``(value, OracleTrace)``."""
    return Functional(Y).traced(oracle, fuel)


class Functional:
    """A compiled closed ``Y : (Nat->Nat)->Nat`` applied to many oracles."""

    def __init__(self, Y: Term):
        require_functional(Y)
        self.term = Y
        self._c = Compiled(App(Y, Omega()))

    def __call__(self, oracle: Oracle, fuel: Optional[int] = None) -> int:
        return self._c.run(oracle, fuel)[0]

    def traced(self, oracle: Oracle, fuel: Optional[int] = None):
        raw, m = self._c.run(oracle, fuel, trace=True)
        return raw, OracleTrace(list(m.trace))
