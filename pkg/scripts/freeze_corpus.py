"""Regenerate corpus/manifest.json from the standard evaluator.

Run after adding or editing a corpus term:

    python scripts/freeze_corpus.py
"""
import json

from systemt.corpus import CORPUS_DIR, load_corpus
from systemt.evaluator import Functional
from systemt.oracles import parse_oracle

ORACLE_SPECS = ["id", "const:0", "const:1", "step:3", "list:9,9,5", "list:3,1,4,1,5", "seeded:7"]


def main():
    entries = {}
    for e in load_corpus():
        f = Functional(e.term)
        entries[e.path.name] = {
            "description": e.description,
            "expected": {spec: f(parse_oracle(spec)) for spec in ORACLE_SPECS},
        }
    out = CORPUS_DIR / "manifest.json"
    out.write_text(json.dumps({"entries": entries}, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(entries)} entries to {out}")


if __name__ == "__main__":
    main()
