"""Novelty decisions for all four feedback modes: none / cov / algo / combo.

Algorithm-specific signals are small integer tuples extracted from a target's
output alone (black-box: no access to implementation internals).  Probe
coverage stands in for statement coverage: reference implementations carry
explicit ``probe(id)`` call sites at branch arms and loop bodies, and the hit
counts are bucketed AFL-style before novelty comparison.  Coverage novelty is
judged against implementation A only.
"""

from __future__ import annotations

import math
from typing import Optional

from .corpus import NoveltyKey
from .outputs import (
    ComponentsOut,
    FlowOut,
    MatchingOut,
    MstOut,
    PairScoresOut,
    ScoresOut,
    SpfOut,
    TargetOutput,
)

MODES = ("none", "cov", "algo", "combo")

PROBE_SATURATION = 0xFFFF

_BUCKET_EDGES = (0, 1, 2, 3, 7, 15, 31, 127)


def bucket(x: int) -> int:
    """AFL hit-count buckets extended to negatives by sign symmetry.

    Non-negative ranges {0},{1},{2},{3},{4..7},{8..15},{16..31},{32..127},
    {128..} map to 0..8; bucket(-x) == -bucket(x).
    """
    if x < 0:
        return -bucket(-x)
    for i, hi in enumerate(_BUCKET_EDGES):
        if x <= hi:
            return i
    return 8


def quantize(x: float) -> int:
    """Float score granularity for corpus keys: q(x) = floor(1000 * x)."""
    return math.floor(x * 1000)


class ProbeMap:
    """Per-execution probe hit counts; cleared simply by using a fresh map."""

    __slots__ = ("hits",)

    def __init__(self) -> None:
        self.hits: dict[int, int] = {}

    def record(self, probe_id: int) -> None:
        c = self.hits.get(probe_id, 0)
        if c < PROBE_SATURATION:
            self.hits[probe_id] = c + 1

    def bucketed_pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((pid, bucket(c)) for pid, c in self.hits.items())


def extract_signal(problem: str, out: TargetOutput) -> tuple:
    """The per-problem feedback tuple (prefixed with the problem id).

    Edge conventions: SPF unreachable -> -1, negative cycle -> -2; empty
    component lists -> 0 counts/sizes; HC with < 2 vertices -> 0; score maps
    with no pairs -> 0; floats quantized with :func:`quantize`.
    """
    if problem == "spf":
        assert isinstance(out, SpfOut)
        if out.status == "length":
            return ("spf", out.length)
        return ("spf", -1 if out.status == "unreachable" else -2)
    if problem == "scc":
        assert isinstance(out, ComponentsOut)
        sizes = [len(c) for c in out.components]
        return ("scc", len(sizes), max(sizes, default=0))
    if problem == "bcc":
        assert isinstance(out, ComponentsOut)
        return ("bcc", max((len(c) for c in out.components), default=0))
    if problem == "mfv":
        assert isinstance(out, FlowOut)
        return ("mfv", out.value)
    if problem == "mst":
        assert isinstance(out, MstOut)
        return ("mst", bucket(out.total_weight), out.nodes)
    if problem == "mm":
        assert isinstance(out, MatchingOut)
        return ("mm", len(out.edges))
    if problem == "hc":
        assert isinstance(out, ScoresOut)
        if len(out.scores) < 2:
            return ("hc", 0)
        two = sorted(out.scores.values())[:2]
        return ("hc", quantize(two[1] - two[0]))
    if problem in ("js", "aa"):
        assert isinstance(out, PairScoresOut)
        best = max(out.scores.values(), default=0.0)
        return (problem, quantize(best))
    raise ValueError(f"unknown problem {problem!r}")


class Feedback:
    """IS_INTERESTING state for one campaign (single-writer, like the corpus)."""

    def __init__(self, mode: str) -> None:
        if mode not in MODES:
            raise ValueError(f"unknown feedback mode {mode!r}")
        self.mode = mode
        self._seen_signals: set[tuple] = set()
        self._seen_pairs: set[tuple[int, int]] = set()

    def is_interesting(
        self, sig: Optional[tuple], probes: Optional[ProbeMap]
    ) -> Optional[NoveltyKey]:
        """Return a novelty key iff the execution should enter the corpus.

        none: never.  cov: any unseen (probe, bucket) pair.  algo: unseen
        signal.  combo: either part unseen; the key carries both parts.
        """
        if self.mode == "none":
            return None
        if self.mode == "algo":
            if sig is None:
                raise ValueError("algo mode requires a signal")
            if sig in self._seen_signals:
                return None
            self._seen_signals.add(sig)
            return ("algo", sig)
        if probes is None:
            raise ValueError(f"{self.mode} mode requires a probe map")
        new_pairs = probes.bucketed_pairs() - self._seen_pairs
        if self.mode == "cov":
            if not new_pairs:
                return None
            self._seen_pairs |= new_pairs
            return ("cov", tuple(sorted(new_pairs)))
        # combo
        if sig is None:
            raise ValueError("combo mode requires a signal")
        new_sig = sig not in self._seen_signals
        if not new_sig and not new_pairs:
            return None
        self._seen_signals.add(sig)
        self._seen_pairs |= new_pairs
        return ("combo", sig, tuple(sorted(new_pairs)))
