"""Dialogue trees: leaves are answers, internal nodes query the oracle.

``Node(label, branch)`` asks for ``alpha(label)`` and continues with
``branch(alpha(label))``.  Branches are lazy; pass ``memo=True`` to cache them.
"""
from __future__ import annotations

import functools
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Union

from .evaluator import FuelExhausted
from .interp import Structure, interpret
from .syntax import App, Omega, Term, require_functional

DEFAULT_FUEL = 100_000


@dataclass(frozen=True)
class Leaf:
    value: int


@dataclass(frozen=True)
class Node:
    label: int
    branch: Callable[[int], "DialogueTree"] = field(compare=False)


DialogueTree = Union[Leaf, Node]
# semantic values at translated types: trees at Nat, host functions at arrows
DialogueSemValue = Union[Leaf, Node, Callable[[Any], Any]]


def _memoized(fn: Callable[[int], Any]) -> Callable[[int], Any]:
    cache: dict = {}
    lock = threading.Lock()

    @functools.wraps(fn)
    def branch(k):
        try:
            return cache[k]
        except KeyError:
            pass
        v = fn(k)
        with lock:
            return cache.setdefault(k, v)
    return branch


def ke_dialogue(f: Callable[[int], DialogueTree], t: DialogueTree, memo: bool = False) -> DialogueTree:
    if isinstance(t, Leaf):
        return f(t.value)
    phi = t.branch
    branch = lambda x: ke_dialogue(f, phi(x), memo)
    return Node(t.label, _memoized(branch) if memo else branch)


def at_dialogue(n: int) -> DialogueTree:
    return Node(n, Leaf)


def structure(memo: bool = False) -> Structure:
    return Structure(
        name="dialogue",
        eta=Leaf,
        ke=lambda f: (lambda t: ke_dialogue(f, t, memo)),
        at=at_dialogue,
    )


DIALOGUE = structure()


def dialogue_of(Y: Term, memo: bool = False) -> DialogueTree:
    require_functional(Y)
    return interpret(App(Y, Omega()), DIALOGUE if not memo else structure(True))


def deval(t: DialogueTree, oracle: Callable[[int], int], fuel: Optional[int] = DEFAULT_FUEL) -> int:
    steps = 0
    while isinstance(t, Node):
        steps += 1
        if fuel is not None and steps > fuel:
            raise FuelExhausted(f"no leaf within {fuel} queries")
        t = t.branch(oracle(t.label))
    return t.value


def path_of(t: DialogueTree, oracle: Callable[[int], int], fuel: Optional[int] = DEFAULT_FUEL) -> list:
    path = []
    while isinstance(t, Node):
        if fuel is not None and len(path) >= fuel:
            raise FuelExhausted(f"no leaf within {fuel} queries")
        ans = oracle(t.label)
        path.append((t.label, ans))
        t = t.branch(ans)
    return path


def to_json(t: DialogueTree, width: int = 3, depth: int = 8) -> dict:
    """A finite window: branches ``0..width-1`` down to ``depth`` queries."""
    if isinstance(t, Leaf):
        return {"leaf": t.value}
    branches: dict = {}
    if depth > 0:
        for k in range(width):
            branches[str(k)] = to_json(t.branch(k), width, depth - 1)
    branches["..."] = "truncated"
    return {"label": t.label, "branches": branches}


def render(t: DialogueTree, width: int = 3, depth: int = 8, indent: str = "") -> str:
    if isinstance(t, Leaf):
        return f"{indent}leaf {t.value}"
    lines = [f"{indent}query {t.label}"]
    if depth > 0:
        for k in range(width):
            lines.append(f"{indent}  [{k}]")
            lines.append(render(t.branch(k), width, depth - 1, indent + "    "))
    lines.append(f"{indent}  ...")
    return "\n".join(lines)
