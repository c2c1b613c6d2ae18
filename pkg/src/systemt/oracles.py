"""Oracles (elements of Baire space) and the CLI oracle-spec language.

Spec strings::

    id              alpha(i) = i
    const:<n>       alpha(i) = n
    step:<n>        alpha(i) = 1 for i < n, 0 for i >= n
    list:<a,b,...>  the listed values, then 0s
    seeded:<seed>   deterministic pseudorandom values in 0..255
"""
from __future__ import annotations

import random
import threading
from typing import Callable, Sequence


class Oracle:
    """A total function N -> N with a printable description."""

    def __init__(self, fn: Callable[[int], int], description: str):
        self._fn = fn
        self.description = description

    def __call__(self, i: int) -> int:
        return self._fn(i)

    def prefix(self, n: int) -> tuple:
        return tuple(self._fn(i) for i in range(n))

    def __repr__(self):
        return f"Oracle({self.description})"


class SeededOracle(Oracle):
    """Pseudorandom values in ``0..bound``, generated lazily and memoised."""

    def __init__(self, seed: int, bound: int = 255):
        self.seed = seed
        self.bound = bound
        self._rng = random.Random(seed)
        self._values: list = []
        self._lock = threading.Lock()
        super().__init__(self._at, f"seeded:{seed}" if bound == 255 else f"seeded:{seed}/{bound}")

    def _at(self, i: int) -> int:
        if i >= len(self._values):
            with self._lock:
                while i >= len(self._values):
                    self._values.append(self._rng.randint(0, self.bound))
        return self._values[i]


def identity() -> Oracle:
    return Oracle(lambda i: i, "id")


def const(n: int) -> Oracle:
    return Oracle(lambda i: n, f"const:{n}")


def step(n: int) -> Oracle:
    return Oracle(lambda i: 1 if i < n else 0, f"step:{n}")


def from_list(values: Sequence[int]) -> Oracle:
    """The listed values followed by zeros (``a * (lambda n. 0)``)."""
    vals = tuple(values)
    return Oracle(lambda i: vals[i] if i < len(vals) else 0,
                  "list:" + ",".join(map(str, vals)))


def prepend(a: Sequence[int], alpha: Callable[[int], int]) -> Oracle:
    """``a * alpha``: the entries of ``a`` followed by ``alpha``."""
    a = tuple(a)
    k = len(a)
    desc = getattr(alpha, "description", "alpha")
    return Oracle(lambda i: a[i] if i < k else alpha(i - k), f"{list(a)}*{desc}")


def shifted(alpha: Callable[[int], int], k: int) -> Callable[[int], int]:
    return lambda i: alpha(i + k)


def parse_oracle(spec: str) -> Oracle:
    spec = spec.strip()
    if spec == "id":
        return identity()
    kind, _, arg = spec.partition(":")
    try:
        if kind == "const":
            return const(int(arg))
        if kind == "step":
            return step(int(arg))
        if kind == "list":
            return from_list([int(x) for x in arg.split(",") if x.strip()])
        if kind == "seeded":
            return SeededOracle(int(arg))
    except ValueError:
        pass
    raise ValueError(f"bad oracle spec {spec!r}; expected id, const:N, step:N, list:N,N,... or seeded:SEED")


def random_oracles(count: int, seed: int, bound: int) -> list:
    """``count`` independent seeded oracles with entries in ``0..bound``."""
    rng = random.Random(seed)
    return [SeededOracle(rng.getrandbits(48), bound) for _ in range(count)]
