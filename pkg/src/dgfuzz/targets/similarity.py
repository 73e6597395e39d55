"""Jaccard similarity and Adamic-Adar scores for all unordered vertex pairs.

Conventions (shared by implementations and oracle): the neighborhood N(v)
includes v itself iff a self-loop (v, v) exists; Jaccard 0/0 is 0; Adamic-
Adar degree is |N(w)| and common neighbors with |N(w)| <= 1 contribute 0
(1/ln(1) is singular).
"""

from __future__ import annotations

import math

import numpy as np

from ..graph import Graph, EndpointPair
from ..outputs import PairScoresOut


def _neighbor_sets(g: Graph) -> list[set[int]]:
    nbr: list[set[int]] = [set() for _ in range(g.num_vertices)]
    for u, v, _ in g.edges:
        nbr[u].add(v)
        nbr[v].add(u)
    return nbr


def js_sorted_merge(g: Graph, ep: EndpointPair, probe=None) -> PairScoresOut:
    """Intersection/union sizes via merging sorted neighbor lists."""
    n = g.num_vertices
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in g.edges:
        lists[u].append(v)
        if u != v:
            lists[v].append(u)
    for l in lists:
        l.sort()
    scores: dict[tuple[int, int], float] = {}
    for u in range(n):
        au = lists[u]
        for v in range(u + 1, n):
            if probe:
                probe(0)
            av = lists[v]
            i = j = inter = 0
            while i < len(au) and j < len(av):
                if probe:
                    probe(1)
                x, y = au[i], av[j]
                if x == y:
                    inter += 1
                    i += 1
                    j += 1
                elif x < y:
                    i += 1
                else:
                    j += 1
            union = len(au) + len(av) - inter
            scores[(u, v)] = inter / union if union else 0.0
    return PairScoresOut(scores)


def js_bitset_intersect(g: Graph, ep: EndpointPair, probe=None) -> PairScoresOut:
    n = g.num_vertices
    masks = [0] * n
    for u, v, _ in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    scores: dict[tuple[int, int], float] = {}
    for u in range(n):
        mu = masks[u]
        for v in range(u + 1, n):
            inter = (mu & masks[v]).bit_count()
            union = (mu | masks[v]).bit_count()
            scores[(u, v)] = inter / union if union else 0.0
    return PairScoresOut(scores)


def aa_per_pair_intersect(g: Graph, ep: EndpointPair, probe=None) -> PairScoresOut:
    n = g.num_vertices
    nbr = _neighbor_sets(g)
    scores: dict[tuple[int, int], float] = {}
    for u in range(n):
        for v in range(u + 1, n):
            if probe:
                probe(0)
            total = 0.0
            for w in sorted(nbr[u] & nbr[v]):
                if probe:
                    probe(1)
                deg = len(nbr[w])
                if deg > 1:
                    total += 1.0 / math.log(deg)
            scores[(u, v)] = total
    return PairScoresOut(scores)


def aa_precomputed_neighborhoods(g: Graph, ep: EndpointPair, probe=None) -> PairScoresOut:
    """Matrix form: S = (M * c) M^T with c_w = 1/ln|N(w)| (0 when |N(w)| <= 1)."""
    n = g.num_vertices
    if n == 0:
        return PairScoresOut({})
    m = np.zeros((n, n))
    for u, v, _ in g.edges:
        m[u, v] = 1.0
        m[v, u] = 1.0
    deg = m.sum(axis=1)
    c = np.where(deg > 1, 1.0 / np.log(np.maximum(deg, 2.0)), 0.0)
    s = (m * c) @ m.T
    return PairScoresOut({(u, v): float(s[u, v]) for u in range(n) for v in range(u + 1, n)})
