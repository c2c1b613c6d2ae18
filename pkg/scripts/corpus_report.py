"""Per-term table for the corpus: emitted term size, uniform modulus on binary
sequences, mean modulus over seeded oracles, and mean query time of the
emitted neighbourhood function.

    python3 scripts/corpus_report.py --oracles 50 --bound 8
"""
import argparse
import statistics
import time
from dataclasses import dataclass

from systemt.analysis import modulus, uc_modulus_cantor
from systemt.corpus import load_corpus
from systemt.evaluator import FuelExhausted
from systemt.oracles import random_oracles
from systemt.syntax import depth, size
from systemt.translate import neighbourhood_term


@dataclass
class ReportConfig:
    oracles: int = 50
    bound: int = 8
    seed: int = 0
    uc_fuel: int = 16


def report(cfg: ReportConfig) -> list:
    rows = []
    for e in load_corpus():
        g = neighbourhood_term(e.term)
        try:
            uc = uc_modulus_cantor(g, cfg.uc_fuel)
        except FuelExhausted:
            uc = None
        mods, t0, queries = [], time.perf_counter(), 0
        for alpha in random_oracles(cfg.oracles, cfg.seed, cfg.bound):
            m = modulus(g, alpha).modulus
            mods.append(m)
            queries += m + 1
        per_query = (time.perf_counter() - t0) / max(queries, 1)
        rows.append((e.name, size(g.term), depth(g.term), uc, statistics.mean(mods), per_query * 1e6))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(ReportConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = ReportConfig(**vars(p.parse_args()))
    print(f"{'term':16} {'size':>6} {'depth':>6} {'uc':>4} {'mean mod':>9} {'us/query':>9}")
    for name, sz, dp, uc, mm, us in report(cfg):
        print(f"{name:16} {sz:6} {dp:6} {str(uc):>4} {mm:9.2f} {us:9.1f}")


if __name__ == "__main__":
    main()
