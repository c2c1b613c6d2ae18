"""Run the neighbourhood-law checker over the corpus for both the emitted term
and the Brouwer route, at a configurable grid, and print per-term summaries.

    python3 scripts/law_sweep.py --max-len 5 --alphabet 4
"""
import argparse
import time
from dataclasses import dataclass

from systemt.analysis import check_nbhd_laws
from systemt.brouwer import brouwer_of, delta
from systemt.corpus import load_corpus
from systemt.translate import neighbourhood_term


@dataclass
class SweepConfig:
    max_len: int = 5
    alphabet: int = 4
    random_pairs: int = 500
    alpha_samples: int = 50
    alpha_bound: int = 8
    seed: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(p.parse_args()))
    bad = 0
    for e in load_corpus():
        for route, g in (("dagger", neighbourhood_term(e.term)), ("delta", delta(brouwer_of(e.term)))):
            t0 = time.perf_counter()
            rep = check_nbhd_laws(g, cfg.max_len, 10_000, cfg.alpha_samples, cfg.alphabet,
                                  cfg.random_pairs, cfg.alpha_bound, cfg.seed)
            bad += len(rep.violations)
            print(f"{e.name:16} {route:6} {rep.summary()} [{time.perf_counter() - t0:.1f}s]")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
