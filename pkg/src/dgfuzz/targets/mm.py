"""Maximum bipartite matching on the parity partition (even ids vs odd ids).

Hopcroft-Karp versus single-path DFS augmentation.  Matchings may differ;
their cardinality may not.  Both use sorted adjacency for fixed tie-breaking.
"""

from __future__ import annotations

from collections import deque

from ..graph import Graph, EndpointPair
from ..outputs import MatchingOut

INF = float("inf")


def _left_adjacency(g: Graph) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v, _ in g.edges:
        left, right = (u, v) if u % 2 == 0 else (v, u)
        adj.setdefault(left, []).append(right)
    for l in adj.values():
        l.sort()
    return adj


def _to_edge_set(match_left: dict[int, int]) -> frozenset:
    return frozenset((min(u, v), max(u, v)) for u, v in match_left.items())


def hopcroft_karp(g: Graph, ep: EndpointPair, probe=None) -> MatchingOut:
    adj = _left_adjacency(g)
    lefts = sorted(adj)
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    while True:
        if probe:
            probe(0)
        # BFS layering from free left vertices.
        dist: dict[int, float] = {}
        q = deque()
        for u in lefts:
            if u not in match_l:
                dist[u] = 0
                q.append(u)
        found_free = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                if probe:
                    probe(1)
                nxt = match_r.get(v)
                if nxt is None:
                    found_free = True
                elif nxt not in dist:
                    dist[nxt] = dist[u] + 1
                    q.append(nxt)
        if not found_free:
            break

        def dfs(u: int) -> bool:
            for v in adj[u]:
                if probe:
                    probe(2)
                nxt = match_r.get(v)
                if nxt is None or (dist.get(nxt) == dist[u] + 1 and dfs(nxt)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = INF
            return False

        for u in lefts:
            if u not in match_l:
                if probe:
                    probe(3)
                dfs(u)
    return MatchingOut(_to_edge_set(match_l))


def augmenting_path(g: Graph, ep: EndpointPair, probe=None) -> MatchingOut:
    adj = _left_adjacency(g)
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}

    def try_augment(u: int, visited: set[int]) -> bool:
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            owner = match_r.get(v)
            if owner is None or try_augment(owner, visited):
                match_l[u] = v
                match_r[v] = u
                return True
        return False

    for u in sorted(adj):
        try_augment(u, set())
    return MatchingOut(_to_edge_set(match_l))
