"""Minimum spanning forest: Prim, Kruskal, Boruvka.

On disconnected graphs all three return a minimum spanning forest; the node
count reported covers every vertex (isolated vertices included).  Forests may
differ between implementations when weights tie; total weight may not.
"""

from __future__ import annotations

import heapq

from ..graph import Graph, EndpointPair
from ..outputs import MstOut


def _canon(u: int, v: int, w: int) -> tuple[int, int, int]:
    return (u, v, w) if u <= v else (v, u, w)


def prim(g: Graph, ep: EndpointPair, probe=None) -> MstOut:
    n = g.num_vertices
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, w in g.edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    visited = [False] * n
    forest: list[tuple[int, int, int]] = []
    total = 0
    for root in range(n):
        if visited[root]:
            continue
        if probe:
            probe(0)
        visited[root] = True
        heap: list[tuple[int, int, int]] = []
        for v, w in adj[root]:
            heapq.heappush(heap, (w, root, v))
        while heap:
            if probe:
                probe(1)
            w, u, v = heapq.heappop(heap)
            if visited[v]:
                if probe:
                    probe(2)
                continue
            visited[v] = True
            forest.append(_canon(u, v, w))
            total += w
            for x, wx in adj[v]:
                if not visited[x]:
                    if probe:
                        probe(3)
                    heapq.heappush(heap, (wx, v, x))
    return MstOut(frozenset(forest), total, n)


def kruskal(g: Graph, ep: EndpointPair, probe=None) -> MstOut:
    n = g.num_vertices
    parent = list(range(n))
    rank = [0] * n

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest = []
    total = 0
    for u, v, w in sorted(g.edges, key=lambda e: (e[2], e[0], e[1])):
        if u == v:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        if rank[ru] < rank[rv]:
            parent[ru] = rv
        elif rank[rv] < rank[ru]:
            parent[rv] = ru
        else:
            parent[rv] = ru
            rank[ru] += 1
        forest.append(_canon(u, v, w))
        total += w
    return MstOut(frozenset(forest), total, n)


def boruvka(g: Graph, ep: EndpointPair, probe=None) -> MstOut:
    n = g.num_vertices
    comp = list(range(n))
    forest: list[tuple[int, int, int]] = []
    total = 0
    real_edges = [(u, v, w) for u, v, w in g.edges if u != v]
    while True:
        # Cheapest outgoing edge per component, ties broken by (w, u, v).
        best: dict[int, tuple[int, int, int]] = {}
        for u, v, w in real_edges:
            cu, cv = comp[u], comp[v]
            if cu == cv:
                continue
            key = (w, min(u, v), max(u, v))
            for c in (cu, cv):
                if c not in best or key < (best[c][2], min(best[c][0], best[c][1]), max(best[c][0], best[c][1])):
                    best[c] = (u, v, w)
        if not best:
            break
        merged = False
        for u, v, w in best.values():
            cu, cv = comp[u], comp[v]
            if cu == cv:
                continue
            forest.append(_canon(u, v, w))
            total += w
            lo, hi = min(cu, cv), max(cu, cv)
            for i in range(n):
                if comp[i] == hi:
                    comp[i] = lo
            merged = True
        if not merged:
            break
    return MstOut(frozenset(forest), total, n)
