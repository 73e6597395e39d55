"""Shortest path finding: Bellman-Ford, Goldberg-Radzik, Dijkstra.

Shared semantics for the differential pair: report ``negative_cycle`` iff a
negative-weight cycle is reachable from s, ``unreachable`` iff t cannot be
reached, otherwise the exact shortest-path length s -> t.  Cycles of total
weight exactly zero are NOT negative cycles; with no negative cycle some
shortest walk is simple, so lengths are finite and exact.
"""

from __future__ import annotations

import heapq
from math import inf

from ..graph import Graph, EndpointPair
from ..outputs import SpfOut


def _adjacency(g: Graph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for u, v, w in g.edges:
        adj[u].append((v, w))
    return adj


def bellman_ford(g: Graph, ep: EndpointPair, probe=None) -> SpfOut:
    n = g.num_vertices
    dist = [inf] * n
    dist[ep.s] = 0
    edges = g.edges
    stable = False
    for _ in range(n - 1):
        if probe:
            probe(0)
        changed = False
        for u, v, w in edges:
            du = dist[u]
            if du + w < dist[v]:
                if probe:
                    probe(1)
                dist[v] = du + w
                changed = True
        if not changed:
            if probe:
                probe(2)
            stable = True
            break
    if not stable:
        for u, v, w in edges:
            if dist[u] is not inf and dist[u] + w < dist[v]:
                if probe:
                    probe(3)
                return SpfOut("negative_cycle")
    if dist[ep.t] is inf:
        if probe:
            probe(4)
        return SpfOut("unreachable")
    if probe:
        probe(5)
    return SpfOut("length", int(dist[ep.t]))


def goldberg_radzik(g: Graph, ep: EndpointPair, probe=None) -> SpfOut:
    """Phase-based scan in topological order of the strictly-improving
    admissible subgraph; a DFS back edge there witnesses a negative cycle."""
    n = g.num_vertices
    adj = _adjacency(g)
    dist = [inf] * n
    dist[ep.s] = 0
    relabeled = [ep.s]
    phases = 0
    while relabeled:
        phases += 1
        if phases > n:
            # A stable labeling is reached within n phases unless a negative
            # cycle keeps improving labels forever.
            return SpfOut("negative_cycle")
        color = [0] * n  # 0 white, 1 gray, 2 black
        order: list[int] = []
        for r in sorted(relabeled):
            if color[r] or dist[r] is inf:
                continue
            color[r] = 1
            stack: list[tuple[int, int]] = [(r, 0)]
            while stack:
                u, i = stack[-1]
                advanced = False
                au = adj[u]
                du = dist[u]
                while i < len(au):
                    v, w = au[i]
                    i += 1
                    # Admissible edge: strictly improving at current labels.
                    if du + w < dist[v]:
                        if color[v] == 1:
                            return SpfOut("negative_cycle")
                        if color[v] == 0:
                            color[v] = 1
                            stack[-1] = (u, i)
                            stack.append((v, 0))
                            advanced = True
                            break
                if not advanced:
                    color[u] = 2
                    order.append(u)
                    stack.pop()
        order.reverse()
        new_relabeled = []
        seen_relabel = [False] * n
        for u in order:
            du = dist[u]
            if du is inf:
                continue
            for v, w in adj[u]:
                if du + w < dist[v]:
                    dist[v] = du + w
                    if not seen_relabel[v]:
                        seen_relabel[v] = True
                        new_relabeled.append(v)
        relabeled = new_relabeled
    if dist[ep.t] is inf:
        return SpfOut("unreachable")
    return SpfOut("length", int(dist[ep.t]))


def dijkstra(g: Graph, ep: EndpointPair, probe=None) -> SpfOut:
    """Requires non-negative weights (the SPF profile tightens accordingly)."""
    for _, _, w in g.edges:
        if w < 0:
            raise ValueError("dijkstra requires non-negative weights")
    adj = _adjacency(g)
    dist = {ep.s: 0}
    done = set()
    heap = [(0, ep.s)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == ep.t:
            return SpfOut("length", d)
        for v, w in adj[u]:
            nd = d + w
            if v not in done and nd < dist.get(v, inf):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return SpfOut("unreachable")
