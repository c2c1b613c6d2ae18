"""Command-line interface.

Exit codes: 0 = all checks pass, 1 = a violation was found, 2 = usage or type error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, brouwer, dialogue
from .corpus import load_corpus, load_term
from .evaluator import FuelExhausted, Functional, evaluate, from_value
from .oracles import parse_oracle
from .syntax import FUNCTIONAL, SystemTError, contains_omega, depth, pretty_type, size, typecheck
from .translate import emit_source, neighbourhood_term

ORACLE_HELP = ("oracle: id | const:N | step:N (1 below N, 0 at and above N) | "
               "list:N1,N2,... (listed values, then 0s) | seeded:SEED (pseudorandom values in 0..255)")
G_HELP = "G: len (length of a) | const:N | sum (sum of entries) | last (last entry, 0 if empty)"
H_HELP = ("H: child:X (value at a*<X>) | succ-child:X (that plus one) | "
          "max:K / sum:K (max / sum of the values at a*<0> .. a*<K-1>)")


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _functional(path: str):
    term = load_term(path)
    ty = typecheck([], term)
    if ty != FUNCTIONAL:
        raise UsageError(f"{path} has type {pretty_type(ty)}, expected {pretty_type(FUNCTIONAL)}")
    return term


def _parse_seq(text: str) -> tuple:
    text = text.strip().strip("[]<>")
    return tuple(int(x) for x in text.split(",") if x.strip())


def parse_g(spec: str):
    kind, _, arg = spec.partition(":")
    if kind == "len":
        return len
    if kind == "const":
        n = int(arg)
        return lambda a: n
    if kind == "sum":
        return sum
    if kind == "last":
        return lambda a: a[-1] if a else 0
    raise UsageError(f"bad G spec {spec!r}; {G_HELP}")


def parse_h(spec: str):
    kind, _, arg = spec.partition(":")
    if kind == "child":
        x = int(arg)
        return lambda a, f: f(x)
    if kind == "succ-child":
        x = int(arg)
        return lambda a, f: f(x) + 1
    if kind == "max":
        k = int(arg)
        return lambda a, f: max(f(x) for x in range(k))
    if kind == "sum":
        k = int(arg)
        return lambda a, f: sum(f(x) for x in range(k))
    raise UsageError(f"bad H spec {spec!r}; {H_HELP}")


# ---------------------------------------------------------------- subcommands


def cmd_check(args) -> int:
    term = load_term(args.file)
    ty = typecheck([], term)
    _emit(args, {"file": args.file, "type": pretty_type(ty), "size": size(term)},
          f"{args.file}: {pretty_type(ty)}")
    return 0


def cmd_eval(args) -> int:
    term = load_term(args.file)
    ty = typecheck([], term)
    oracle = parse_oracle(args.oracle) if args.oracle else None
    if ty == FUNCTIONAL:
        if oracle is None:
            raise UsageError("--oracle is required to evaluate a functional")
        value, trace = Functional(term).traced(oracle, args.fuel)
        _emit(args, {"value": value, "oracle": oracle.description, "trace": trace.queries},
              f"{value}\nqueries: " + ", ".join(f"{i}->{v}" for i, v in trace.queries))
        return 0
    if contains_omega(term) and oracle is None:
        raise UsageError("the term mentions Omega; pass --oracle")
    value = from_value(evaluate(term, oracle, args.fuel))
    if callable(value):
        value = f"<function : {pretty_type(ty)}>"
    _emit(args, {"value": value, "type": pretty_type(ty)}, str(value))
    return 0


def cmd_translate(args) -> int:
    term = _functional(args.file)
    gamma = neighbourhood_term(term)
    source = emit_source(gamma)
    stats = {"size": size(gamma.term), "depth": depth(gamma.term)}
    if args.out:
        Path(args.out).write_text(f"-- neighbourhood function of {args.file}\n{source}\n", encoding="utf-8")
    elif not args.json:
        print(source)
    if args.json:
        payload = dict(stats)
        if not args.out:
            payload["source"] = source
        print(json.dumps(payload, indent=2))
    elif args.stats:
        print(f"size {stats['size']}, depth {stats['depth']}", file=sys.stderr if not args.out else sys.stdout)
    return 0


def cmd_modulus(args) -> int:
    term = _functional(args.file)
    oracle = parse_oracle(args.oracle)
    report = analysis.modulus(neighbourhood_term(term), oracle, args.fuel, Y=term)
    payload = {"modulus": report.modulus, "induced_value": report.induced_value,
               "trace_indices": sorted(report.trace_indices), "traced_value": report.traced_value,
               "consistent": report.consistent, "oracle": oracle.description}
    _emit(args, payload,
          f"modulus {report.modulus}, value {report.induced_value}, "
          f"queried indices {sorted(report.trace_indices)}, consistent: {report.consistent}")
    return 0 if report.consistent else 1


def cmd_uc(args) -> int:
    term = _functional(args.file)
    n = analysis.uc_modulus_cantor(neighbourhood_term(term), args.fuel)
    _emit(args, {"uc_modulus": n}, f"uniform modulus on binary sequences: {n}")
    return 0


def _tree_cmd(args, build, to_json, render) -> int:
    tree = build(_functional(args.file))
    if args.json:
        print(json.dumps(to_json(tree, args.width, args.depth), indent=2))
    else:
        print(render(tree, args.width, args.depth))
    return 0


def cmd_dialogue(args) -> int:
    return _tree_cmd(args, dialogue.dialogue_of, dialogue.to_json, dialogue.render)


def cmd_brouwer(args) -> int:
    return _tree_cmd(args, brouwer.brouwer_of, brouwer.to_json, brouwer.render)


def cmd_barrec(args) -> int:
    term = _functional(args.file)
    cfg = analysis.BarRecConfig(term, parse_g(args.g), parse_h(args.h))
    run = analysis.bar_recursion_run(cfg, _parse_seq(args.start), args.fuel)
    violations = run.verify(cfg)
    payload = {"value": run.value, "visited": len(run.calls),
               "violations": [[list(a), msg] for a, msg in violations]}
    _emit(args, payload, f"BR({list(run.start)}) = {run.value} "
                         f"({len(run.calls)} nodes visited, {len(violations)} equation violations)")
    return 1 if violations else 0


def cmd_selftest(args) -> int:
    failures = 0
    results = []
    for entry in load_corpus(args.corpus):
        rep = analysis.differential_check(entry.term, args.trials, args.seed)
        failures += len(rep.mismatches)
        results.append({"term": entry.name, "trials": rep.trials, "mismatches": len(rep.mismatches),
                        "first": rep.mismatches[0].__dict__ if rep.mismatches else None})
        if not args.json:
            status = "ok" if rep.ok else f"{len(rep.mismatches)} mismatches"
            print(f"{entry.name:20} {status}")
    if args.json:
        print(json.dumps({"seed": args.seed, "results": results}, indent=2, default=str))
    else:
        print(f"seed {args.seed}: {'all routes agree' if not failures else f'{failures} mismatches'}")
    return 1 if failures else 0


# ---------------------------------------------------------------- argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="systemt", description=__doc__.splitlines()[0],
                                epilog=ORACLE_HELP)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check", cmd_check, "parse and typecheck a term")
    sp.add_argument("file")

    sp = add("eval", cmd_eval, "evaluate a closed term; functionals are applied to the oracle")
    sp.add_argument("file")
    sp.add_argument("--oracle", help=ORACLE_HELP)
    sp.add_argument("--fuel", type=int, default=None, help="step budget")

    sp = add("translate", cmd_translate, "emit the neighbourhood-function term of a functional")
    sp.add_argument("file")
    sp.add_argument("--out", help="write the emitted source here instead of stdout")
    sp.add_argument("--stats", action="store_true", help="print term size and depth")

    sp = add("modulus", cmd_modulus, "modulus of continuity at an oracle")
    sp.add_argument("file")
    sp.add_argument("--oracle", required=True, help=ORACLE_HELP)
    sp.add_argument("--fuel", type=int, default=10_000, help="longest prefix to try")

    sp = add("uc", cmd_uc, "uniform modulus of continuity on binary sequences")
    sp.add_argument("file")
    sp.add_argument("--fuel", type=int, default=24, help="deepest level to search")

    for name, fn, what in (("dialogue", cmd_dialogue, "dialogue tree"), ("brouwer", cmd_brouwer, "Brouwer operation")):
        sp = add(name, fn, f"print a finite window of the {what} of a functional")
        sp.add_argument("file")
        sp.add_argument("--width", type=int, default=3, help="branches 0..K-1 per node")
        sp.add_argument("--depth", type=int, default=8, help="levels to expand")

    sp = add("barrec", cmd_barrec, "bar recursion with the functional as stopping function")
    sp.add_argument("file")
    sp.add_argument("--g", required=True, help=G_HELP)
    sp.add_argument("--h", required=True, help=H_HELP)
    sp.add_argument("--start", default="", help="start sequence, e.g. 4,9 (default empty)")
    sp.add_argument("--fuel", type=int, default=64, help="recursion depth guard")

    sp = add("selftest", cmd_selftest, "five-way differential check over the corpus")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--corpus", default=None, help="corpus directory (default: bundled corpus)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SystemTError, ValueError, OSError) as e:
        if isinstance(e, FuelExhausted):
            print(f"error: {e}", file=sys.stderr)
            return 1
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
