"""Deterministic initial-corpus generation.

Erdos-Renyi-style: per graph, N is drawn from size_range and each candidate
vertex pair becomes an edge with probability p ~ U[0.1, 0.5].  Generated
seeds deliberately avoid self-loops, antiparallel directed edge pairs and
other exact-cancellation structure: the injected bug classes all trigger on
exactly those features, and a seed corpus that already contains them would
make the bugs findable without fuzzing.
"""

from __future__ import annotations

import random

from .graph import Graph, GraphProfile, make_graph, validate
from .targets import PROFILES


def generate_seed(
    p: GraphProfile, rng: random.Random, size_range: tuple[int, int] = (4, 10)
) -> Graph:
    n = rng.randint(*size_range)
    n = min(n, p.max_vertices)
    prob = rng.uniform(0.1, 0.5)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if p.require_bipartite and (u + v) % 2 == 0:
                continue
            if rng.random() >= prob:
                continue
            if len(edges) >= p.max_edges:
                break
            w = rng.randint(p.weight_min, p.weight_max) if p.weighted else 1
            if p.directed and rng.random() < 0.5:
                edges.append((v, u, w))
            else:
                edges.append((u, v, w))
    return make_graph(p.directed, n, edges, allow_self_loops=False)


def gen_seeds(
    problem: str,
    count: int,
    rng_seed: int,
    size_range: tuple[int, int] = (4, 10),
) -> list[Graph]:
    """`count` profile-valid graphs; byte-reproducible for equal arguments."""
    if count < 1:
        raise ValueError("count must be >= 1")
    lo, hi = size_range
    if not 1 <= lo <= hi:
        raise ValueError(f"bad size range {size_range}")
    p = PROFILES[problem]
    rng = random.Random(rng_seed)
    out = []
    for _ in range(count):
        g = generate_seed(p, rng, size_range)
        assert not validate(g, p)
        out.append(g)
    return out


def single_vertex_seed(p: GraphProfile) -> Graph:
    """The default initial corpus: one vertex, no edges."""
    return Graph(p.directed, 1, ())
