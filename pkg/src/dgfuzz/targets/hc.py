"""Harmonic centrality: per-source BFS versus a Floyd-Warshall matrix pass.

Score of v = sum of 1/d(v, u) over u != v, with unreachable pairs
contributing 0.  Undirected, unweighted.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from ..graph import Graph, EndpointPair
from ..outputs import ScoresOut


def bfs_per_source(g: Graph, ep: EndpointPair, probe=None) -> ScoresOut:
    n = g.num_vertices
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in g.edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    scores: dict[int, float] = {}
    for s in range(n):
        if probe:
            probe(0)
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        total = 0.0
        while q:
            u = q.popleft()
            du1 = dist[u] + 1
            for w in adj[u]:
                if dist[w] == -1:
                    if probe:
                        probe(1)
                    dist[w] = du1
                    total += 1.0 / du1
                    q.append(w)
        scores[s] = total
    return ScoresOut(scores)


def all_pairs_floyd(g: Graph, ep: EndpointPair, probe=None) -> ScoresOut:
    n = g.num_vertices
    if n == 0:
        return ScoresOut({})
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0.0)
    for u, v, _ in g.edges:
        if u != v:
            d[u, v] = 1.0
            d[v, u] = 1.0
    for k in range(n):
        np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :], out=d)
    with np.errstate(divide="ignore"):
        inv = 1.0 / d
    np.fill_diagonal(inv, 0.0)
    inv[np.isinf(d)] = 0.0
    totals = inv.sum(axis=1)
    return ScoresOut({v: float(totals[v]) for v in range(n)})
