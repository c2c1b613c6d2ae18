"""Gödel's System T with an oracle constant, its standard evaluator, tree models,
and a compiler to neighbourhood functions."""
from .analysis import (
    BarRecConfig, bar_fold, bar_recursor, check_nbhd_laws, differential_check, modulus,
    uc_modulus_cantor,
)
from .brouwer import beval, brouwer_of, delta
from .corpus import load_corpus
from .dialogue import deval, dialogue_of
from .evaluator import Functional, eval_nat_traced, evaluate
from .nbhd import NbhFn
from .syntax import parse_term, parse_type, pretty, typecheck
from .translate import dagger_term, dagger_type, emit_source, neighbourhood_term

__all__ = [
    "BarRecConfig", "NbhFn", "Functional",
    "bar_fold", "bar_recursor", "beval", "brouwer_of", "check_nbhd_laws", "dagger_term",
    "dagger_type", "delta", "deval", "dialogue_of", "differential_check", "emit_source",
    "eval_nat_traced", "evaluate", "load_corpus", "modulus", "neighbourhood_term", "parse_term",
    "parse_type", "pretty", "typecheck", "uc_modulus_cantor",
]
