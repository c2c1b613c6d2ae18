"""Brouwer operations: inductively generated neighbourhood functions.

``BSup(branch)`` reads the *next* entry of the input and continues with
``branch(entry)`` on the rest; ``BLeaf(n)`` answers ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

from .dialogue import _memoized
from .evaluator import FuelExhausted
from .interp import Structure, interpret
from .nbhd import NbhFn
from .syntax import App, Omega, Term, require_functional

DEFAULT_FUEL = 100_000


@dataclass(frozen=True)
class BLeaf:
    value: int


@dataclass(frozen=True)
class BSup:
    branch: Callable[[int], "BrouwerOp"] = field(compare=False)


BrouwerOp = Union[BLeaf, BSup]


def skip(t: BrouwerOp, a: Sequence[int]) -> BrouwerOp:
    for x in a:
        if isinstance(t, BLeaf):
            return t
        t = t.branch(x)
    return t


def aux(f: Callable[[int], BrouwerOp], t: BrouwerOp, a: Sequence[int] = (), memo: bool = False) -> BrouwerOp:
    if isinstance(t, BLeaf):
        return skip(f(t.value), a)
    phi = t.branch
    a = tuple(a)
    branch = lambda x: aux(f, phi(x), a + (x,), memo)
    return BSup(_memoized(branch) if memo else branch)


def ke_brouwer(f: Callable[[int], BrouwerOp], t: BrouwerOp, memo: bool = False) -> BrouwerOp:
    return aux(f, t, (), memo)


def at_bt(n: int) -> BrouwerOp:
    t: BrouwerOp = BSup(BLeaf)
    for _ in range(n):
        t = BSup(lambda x, below=t: below)
    return t


def structure(memo: bool = False) -> Structure:
    return Structure(
        name="brouwer",
        eta=BLeaf,
        ke=lambda f: (lambda t: ke_brouwer(f, t, memo)),
        at=at_bt,
    )


BROUWER = structure()


def brouwer_of(Y: Term, memo: bool = False) -> BrouwerOp:
    require_functional(Y)
    return interpret(App(Y, Omega()), BROUWER if not memo else structure(True))


def beval(t: BrouwerOp, oracle: Callable[[int], int], fuel: Optional[int] = DEFAULT_FUEL) -> int:
    k = 0
    while isinstance(t, BSup):
        if fuel is not None and k >= fuel:
            raise FuelExhausted(f"no leaf within {fuel} reads")
        t = t.branch(oracle(k))
        k += 1
    return t.value


def delta_query(t: BrouwerOp, a: Sequence[int]) -> int:
    for x in a:
        if isinstance(t, BLeaf):
            return t.value + 1
        t = t.branch(x)
    return t.value + 1 if isinstance(t, BLeaf) else 0


def delta(t: BrouwerOp) -> NbhFn:
    return NbhFn.from_host(lambda a: delta_query(t, a), name="delta")


def to_json(t: BrouwerOp, width: int = 3, depth: int = 8) -> dict:
    if isinstance(t, BLeaf):
        return {"leaf": t.value}
    branches: dict = {}
    if depth > 0:
        for k in range(width):
            branches[str(k)] = to_json(t.branch(k), width, depth - 1)
    branches["..."] = "truncated"
    return {"sup": branches}


def render(t: BrouwerOp, width: int = 3, depth: int = 8, indent: str = "") -> str:
    if isinstance(t, BLeaf):
        return f"{indent}leaf {t.value}"
    lines = [f"{indent}sup"]
    if depth > 0:
        for k in range(width):
            lines.append(f"{indent}  [{k}]")
            lines.append(render(t.branch(k), width, depth - 1, indent + "    "))
    lines.append(f"{indent}  ...")
    return "\n".join(lines)
