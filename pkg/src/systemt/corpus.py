"""The checked-in term corpus.

Every ``*.st`` file in the corpus directory is an entry; ``manifest.json``
supplies descriptions and expected values (produced by the standard
evaluator, see ``scripts/freeze_corpus.py``).  The first ``--`` comment of a
file is the fallback description.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .syntax import SystemTError, Term, parse_term, require_functional

CORPUS_DIR = Path(__file__).with_name("corpus")


class CorpusError(SystemTError):
    pass


@dataclass
class CorpusEntry:
    path: Path
    description: str
    term: Term
    expected: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.path.stem

    @property
    def source(self) -> str:
        return self.path.read_text(encoding="utf-8")


def _first_comment(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("--"):
            return line[2:].strip()
    return ""


def load_term(path: Union[str, Path]) -> Term:
    path = Path(path)
    try:
        return parse_term(path.read_text(encoding="utf-8"))
    except SystemTError as e:
        raise CorpusError(f"{path}: {e}") from e


def load_corpus(directory: Optional[Union[str, Path]] = None) -> list:
    directory = Path(directory) if directory is not None else CORPUS_DIR
    if not directory.is_dir():
        raise CorpusError(f"corpus directory {directory} does not exist")
    manifest_path = directory / "manifest.json"
    manifest = {}
    if manifest_path.exists():
        manifest = json.loads(manifest_path.read_text(encoding="utf-8")).get("entries", {})
    entries = []
    for path in sorted(directory.glob("*.st")):
        text = path.read_text(encoding="utf-8")
        term = load_term(path)
        try:
            require_functional(term)
        except SystemTError as e:
            raise CorpusError(f"{path}: {e}") from e
        meta = manifest.get(path.name, {})
        entries.append(CorpusEntry(
            path=path,
            description=meta.get("description") or _first_comment(text),
            term=term,
            expected=dict(meta.get("expected", {})),
        ))
    return entries


def corpus_entry(name: str, directory: Optional[Union[str, Path]] = None) -> CorpusEntry:
    for e in load_corpus(directory):
        if e.name == name or e.path.name == name:
            return e
    raise CorpusError(f"no corpus entry named {name!r}")
