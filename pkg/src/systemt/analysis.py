"""Moduli of continuity, uniform continuity on Cantor space, bar-induction folds,
bar recursion at the lowest type, and the five-route differential harness."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence, Union

from . import brouwer, dialogue
from .evaluator import FuelExhausted, Functional, PartialSeq, UnknownEntry
from .nbhd import NbhFn
from .oracles import from_list, random_oracles
from .syntax import Term
from .translate import neighbourhood_term


# ---------------------------------------------------------------- neighbourhood laws


@dataclass
class Violation:
    condition: int
    detail: str
    a: tuple = ()
    b: tuple = ()
    values: tuple = ()


@dataclass
class NbhLawReport:
    seed: int
    violations: list = field(default_factory=list)
    prefixes_checked: int = 0
    positive_prefixes: int = 0
    probes: int = 0
    random_pairs: int = 0
    alpha_samples: int = 0
    secured_lengths: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return (f"{status}: {self.prefixes_checked} prefixes ({self.positive_prefixes} secured), "
                f"{self.probes} extension probes, {self.random_pairs} random pairs, "
                f"{self.alpha_samples} sampled alpha (seed {self.seed})")


def _all_sequences(max_len: int, alphabet: int):
    for n in range(max_len + 1):
        yield from itertools.product(range(alphabet), repeat=n)


def _stable_below(gamma: NbhFn, a: tuple, value: int, max_ext: int, alphabet: int,
                  report: NbhLawReport) -> Optional[Violation]:
    """Check ``gamma(a * b) == value`` for every ``b`` with ``|b| <= max_ext``.

    ``b`` ranges over ``alphabet`` entries.  A probe evaluates gamma on a
    sequence that knows only ``c`` but reports a longer length; if it never
    reads an unknown entry, its answer is gamma's value on *every* extension of
    ``c`` to that length.  Otherwise the next entry is enumerated.
    """
    stack = [a]
    while stack:
        c = stack.pop()
        remaining = max_ext - (len(c) - len(a))
        branch = False
        for length in range(len(c), len(c) + remaining + 1):
            report.probes += 1
            try:
                got = gamma.query_raw(PartialSeq(c, length) if length > len(c) else c)
            except UnknownEntry:
                branch = True
                break
            if got != value:
                b = c[len(a):] + (0,) * (length - len(c))
                return Violation(2, "value changed under extension", a, b, (value, gamma.query(a + b)))
        if branch:
            stack.extend(c + (x,) for x in range(alphabet))
    return None


def check_nbhd_laws(gamma: NbhFn, max_len: int = 6, fuel: int = 10_000, alpha_samples: int = 100,
                    alphabet: int = 4, random_pairs: int = 1000, alpha_bound: int = 8,
                    seed: int = 0) -> NbhLawReport:
    """Check both neighbourhood-function conditions; violations are returned, not raised.

    Condition 2 (stability) is covered exhaustively for all ``a``, ``b`` with
    ``|a|, |b| <= max_len`` and entries below ``alphabet``, plus ``random_pairs``
    longer random pairs.  Condition 1 (every alpha is secured) is checked on
    ``alpha_samples`` seeded oracles with entries in ``0..alpha_bound``.
    """
    report = NbhLawReport(seed=seed)
    for a in _all_sequences(max_len, alphabet):
        report.prefixes_checked += 1
        v = gamma.query(a)
        if v > 0:
            report.positive_prefixes += 1
            bad = _stable_below(gamma, a, v, max_len, alphabet, report)
            if bad is not None:
                report.violations.append(bad)

    rng = random.Random(seed)
    for _ in range(random_pairs):
        la = rng.randint(0, 2 * max_len)
        lb = rng.randint(max_len + 1 if la <= max_len else 1, 2 * max_len)
        a = tuple(rng.randint(0, alpha_bound) for _ in range(la))
        b = tuple(rng.randint(0, alpha_bound) for _ in range(lb))
        report.random_pairs += 1
        va = gamma.query(a)
        if va > 0:
            vab = gamma.query(a + b)
            if vab != va:
                report.violations.append(Violation(2, "value changed under extension (random pair)",
                                                   a, b, (va, vab)))

    for alpha in random_oracles(alpha_samples, seed, alpha_bound):
        report.alpha_samples += 1
        try:
            report.secured_lengths.append(gamma.secured_at(alpha, fuel))
        except FuelExhausted:
            report.violations.append(Violation(1, f"not secured within {fuel}", alpha.prefix(16)))
    return report


# ---------------------------------------------------------------- moduli


@dataclass
class ContinuityReport:
    modulus: int
    induced_value: int
    trace_indices: set = field(default_factory=set)
    traced_value: Optional[int] = None

    @property
    def consistent(self) -> bool:
        if any(i >= self.modulus for i in self.trace_indices):
            return False
        return self.traced_value is None or self.traced_value == self.induced_value


def modulus(gamma: NbhFn, oracle: Callable[[int], int], fuel: int = 10_000,
            Y: Union[Term, Functional, None] = None) -> ContinuityReport:
    m = gamma.secured_at(oracle, fuel)
    value = gamma.query(tuple(oracle(i) for i in range(m))) - 1
    report = ContinuityReport(m, value)
    if Y is not None:
        f = Y if isinstance(Y, Functional) else Functional(Y)
        traced, trace = f.traced(oracle)
        report.trace_indices = trace.indices
        report.traced_value = traced
    return report


def uc_modulus_cantor(gamma: NbhFn, fuel: int = 64) -> int:
    """Least n such that every binary sequence of length n has a secured prefix."""
    frontier = [()]
    for n in range(fuel + 1):
        frontier = [a for a in frontier if gamma.query(a) == 0]
        if not frontier:
            return n
        frontier = [a + (x,) for a in frontier for x in (0, 1)]
    raise FuelExhausted(f"binary tree not secured at depth <= {fuel}")


# ---------------------------------------------------------------- bar induction


def bar_fold(gamma: NbhFn, secured: Callable[[tuple], Any], step: Callable[[tuple, Callable[[int], Any]], Any],
             start: Sequence[int] = (), fuel: int = 64) -> Any:
    """Recursion over unsecured sequences.

    ``F(a) = secured(a)`` if ``gamma(a) > 0`` else ``step(a, x -> F(a * <x>))``;
    returns ``F(start)``.  ``step`` must query finitely many children.
    """
    start = tuple(start)

    def F(a: tuple):
        if gamma.query(a) > 0:
            return secured(a)
        if len(a) - len(start) >= fuel:
            raise FuelExhausted(f"unsecured path longer than {fuel} below {list(start)}")
        return step(a, lambda x: F(a + (x,)))
    return F(start)


# ---------------------------------------------------------------- bar recursion


@dataclass
class BarRecConfig:
    Y: Any  # closed Term of type (Nat->Nat)->Nat, or a host function of the oracle
    G: Callable[[tuple], Any]
    H: Callable[[tuple, Callable[[int], Any]], Any]

    def stopping(self) -> Callable[[Callable[[int], int]], int]:
        if not callable(self.Y):
            self.Y = Functional(self.Y)
        return self.Y


@dataclass
class BarRecCall:
    stopped: bool
    value: Any


@dataclass
class BarRecRun:
    start: tuple
    value: Any
    calls: dict

    def verify(self, cfg: BarRecConfig) -> list:
        """Re-check the defining equation at every visited node from the recorded children."""
        y = cfg.stopping()
        violations = []
        for a, call in self.calls.items():
            stopped = y(from_list(a)) < len(a)
            if stopped != call.stopped:
                violations.append((a, "stopping condition differs on recheck"))
                continue
            if stopped:
                expected = cfg.G(a)
            else:
                def child(x, a=a):
                    key = a + (x,)
                    if key not in self.calls:
                        raise LookupError(f"child {list(key)} was never visited")
                    return self.calls[key].value
                try:
                    expected = cfg.H(a, child)
                except LookupError as e:
                    violations.append((a, str(e)))
                    continue
            if expected != call.value:
                violations.append((a, f"recorded {call.value!r}, equation gives {expected!r}"))
        return violations


def bar_recursion_run(cfg: BarRecConfig, a: Sequence[int] = (), fuel: int = 64) -> BarRecRun:
    y = cfg.stopping()
    start = tuple(a)
    calls: dict = {}

    def br(b: tuple):
        if b in calls:
            return calls[b].value
        if len(b) - len(start) > fuel:
            raise FuelExhausted(f"bar recursion deeper than {fuel} below {list(start)}")
        if y(from_list(b)) < len(b):
            calls[b] = BarRecCall(True, cfg.G(b))
        else:
            calls[b] = BarRecCall(False, cfg.H(b, lambda x: br(b + (x,))))
        return calls[b].value

    value = br(start)
    return BarRecRun(start, value, calls)


def bar_recursor(cfg: BarRecConfig, a: Sequence[int] = (), fuel: int = 64) -> Any:
    return bar_recursion_run(cfg, a, fuel).value


# ---------------------------------------------------------------- differential harness

ROUTES = ("eval", "dialogue", "brouwer", "dagger", "delta")


@dataclass
class Mismatch:
    trial: int
    alpha_prefix: tuple
    values: dict


@dataclass
class DifferentialReport:
    seed: int
    trials: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def differential_check(Y: Term, trials: int = 100, seed: int = 0, bound: int = 8,
                       fuel: int = 10_000, gamma: Optional[NbhFn] = None) -> DifferentialReport:
    f = Functional(Y)
    dt = dialogue.dialogue_of(Y)
    bt = brouwer.brouwer_of(Y)
    gamma = gamma or neighbourhood_term(Y)
    d = brouwer.delta(bt)
    report = DifferentialReport(seed, trials)
    for i, alpha in enumerate(random_oracles(trials, seed, bound)):
        values = {}
        for name, route in (("eval", lambda: f(alpha)),
                            ("dialogue", lambda: dialogue.deval(dt, alpha)),
                            ("brouwer", lambda: brouwer.beval(bt, alpha)),
                            ("dagger", lambda: gamma.induced(alpha, fuel)),
                            ("delta", lambda: d.induced(alpha, fuel))):
            try:
                values[name] = route()
            except FuelExhausted as e:
                values[name] = f"fuel: {e}"
        if len(set(values.values())) != 1:
            report.mismatches.append(Mismatch(i, alpha.prefix(12), values))
    return report

