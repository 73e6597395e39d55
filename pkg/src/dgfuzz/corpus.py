"""Corpus storage keyed by novelty, random seed selection, constant energy.

Novelty keys are plain tuples tagged by origin:

* ``("seed", index)`` — initial corpus entries (duplicates are retained),
* ``("algo", signal)`` — a new algorithm-specific signal value,
* ``("cov", new_pairs)`` — newly seen (probe id, bucketed count) pairs,
* ``("combo", signal, new_pairs)`` — either part novel; key carries both.

Keys are pairwise distinct across entries, and the corpus is append-only for
the lifetime of a campaign, so entry indices are stable bug-report ids.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .graph import Graph, parse, serialize

NoveltyKey = tuple


class EmptyCorpus(RuntimeError):
    pass


class SeedLoadError(RuntimeError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    novelty_key: NoveltyKey
    discovered_at: int


class Corpus:
    def __init__(self) -> None:
        self.entries: list[CorpusEntry] = []
        self.seen_keys: set[NoveltyKey] = set()

    def __len__(self) -> int:
        return len(self.entries)

    def add_if_novel(self, g: Graph, key: NoveltyKey, discovered_at: int = 0) -> bool:
        """Append iff the key is unseen; never mutates otherwise."""
        if key in self.seen_keys:
            return False
        self.seen_keys.add(key)
        self.entries.append(CorpusEntry(g, key, discovered_at))
        return True

    def choose_next(self, rng: random.Random) -> Graph:
        """Uniform draw over entries; the corpus is left unmodified."""
        if not self.entries:
            raise EmptyCorpus("choose_next on an empty corpus")
        return self.entries[rng.randrange(len(self.entries))].graph


def assign_energy(g: Graph, config_energy: int) -> int:
    """Fixed, configurable energy: the same count for every seed."""
    if config_energy < 1:
        raise ValueError("energy must be >= 1")
    return config_energy


def load_seed_corpus(path: str) -> list[Graph]:
    """Load ``*.graph`` files in lexicographic filename order (normative:
    the order feeds RNG-driven selection and therefore reproducibility)."""
    try:
        names = sorted(f for f in os.listdir(path) if f.endswith(".graph"))
    except OSError as e:
        raise SeedLoadError(f"cannot read seed corpus directory {path!r}: {e}") from e
    graphs = []
    for name in names:
        full = os.path.join(path, name)
        with open(full, "r", encoding="ascii") as fh:
            try:
                graphs.append(parse(fh.read()))
            except ValueError as e:
                raise SeedLoadError(f"{full}: {e}") from e
    return graphs


def write_corpus_entry(dir_path: str, index: int, g: Graph) -> str:
    name = os.path.join(dir_path, f"{index:06d}.graph")
    with open(name, "w", encoding="ascii") as fh:
        fh.write(serialize(g))
    return name
