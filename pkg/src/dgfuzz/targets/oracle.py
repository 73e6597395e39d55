"""Exhaustive ground truth for small graphs (independent of the targets).

The oracle deliberately uses brute-force methods (path/cycle/subset
enumeration, reachability closure, cut enumeration) that share no code with
the reference implementations.  Guarded to N <= 8 and M <= 16.
"""

from __future__ import annotations

import math
from itertools import combinations

from ..graph import Graph
from ..outputs import (
    ComponentsOut,
    FlowOut,
    MatchingOut,
    MstOut,
    PairScoresOut,
    ScoresOut,
    SpfOut,
    TargetOutput,
)
from . import TargetInput

MAX_N = 8
MAX_M = 16


class OracleTooLarge(ValueError):
    pass


def _check_size(g: Graph) -> None:
    if g.num_vertices > MAX_N or g.num_edges > MAX_M:
        raise OracleTooLarge(f"N={g.num_vertices}, M={g.num_edges} exceeds ({MAX_N}, {MAX_M})")


def _out_adj(g: Graph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for u, v, w in g.edges:
        adj[u].append((v, w))
        if not g.directed and u != v:
            adj[v].append((u, w))
    return adj


def _reachable_from(g: Graph, s: int) -> set[int]:
    adj = _out_adj(g)
    seen = {s}
    todo = [s]
    while todo:
        u = todo.pop()
        for v, _ in adj[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def _simple_cycles_weights(g: Graph, restrict: set[int]) -> list[int]:
    """Total weights of all directed simple cycles within the given vertex set."""
    adj = _out_adj(g)
    weights = []

    def extend(start: int, u: int, total: int, on_path: set[int]) -> None:
        for v, w in adj[u]:
            if v == start:
                weights.append(total + w)
            elif v > start and v not in on_path and v in restrict:
                on_path.add(v)
                extend(start, v, total + w, on_path)
                on_path.remove(v)

    for start in sorted(restrict):
        extend(start, start, 0, {start})
    # self-loops are cycles too (handled above via v == start when u == start
    # only if the loop edge exists; adj includes them)
    return weights


def _spf(g: Graph, s: int, t: int) -> SpfOut:
    reach = _reachable_from(g, s)
    if any(w < 0 for w in _simple_cycles_weights(g, reach)):
        return SpfOut("negative_cycle")
    if t not in reach:
        return SpfOut("unreachable")
    # No negative cycle: a shortest walk is simple; enumerate simple paths.
    adj = _out_adj(g)
    best = [None]

    def walk(u: int, total: int, on_path: set[int]) -> None:
        if u == t and (best[0] is None or total < best[0]):
            best[0] = total
        for v, w in adj[u]:
            if v not in on_path:
                on_path.add(v)
                walk(v, total + w, on_path)
                on_path.remove(v)

    if s == t:
        return SpfOut("length", 0)
    walk(s, 0, {s})
    return SpfOut("length", best[0])


def _undirected_simple(g: Graph) -> list[tuple[int, int, int]]:
    return [(u, v, w) for u, v, w in g.edges if u != v]


def _mst(g: Graph) -> MstOut:
    """Minimum spanning forest over all acyclic edge subsets."""
    n = g.num_vertices
    edges = _undirected_simple(g)
    target_rank = 0  # n - number of connected components

    def comp_count(edge_subset) -> int:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        c = n
        for u, v, _ in edge_subset:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                c -= 1
        return c

    target_rank = n - comp_count(edges)
    best = None
    for subset in combinations(edges, target_rank):
        if comp_count(subset) != n - target_rank:
            continue  # contains a cycle (rank deficient)
        weight = sum(w for _, _, w in subset)
        if best is None or weight < best[0]:
            best = (weight, subset)
    if best is None:
        return MstOut(frozenset(), 0, n)
    return MstOut(frozenset(best[1]), best[0], n)


def _scc(g: Graph) -> ComponentsOut:
    n = g.num_vertices
    reach = [[False] * n for _ in range(n)]
    for v in range(n):
        reach[v][v] = True
    for u, v, _ in g.edges:
        reach[u][v] = True
    for k in range(n):
        rk = reach[k]
        for i in range(n):
            if reach[i][k]:
                ri = reach[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    comps = []
    assigned = [False] * n
    for v in range(n):
        if assigned[v]:
            continue
        comp = {u for u in range(n) if reach[v][u] and reach[u][v]}
        for u in comp:
            assigned[u] = True
        comps.append(frozenset(comp))
    return ComponentsOut(frozenset(comps))


def _bcc(g: Graph) -> ComponentsOut:
    """Blocks = closure of 'two edges lie on a common simple cycle'; bridges
    become singleton blocks."""
    edges = _undirected_simple(g)
    m = len(edges)
    index = {(u, v): i for i, (u, v, _) in enumerate(edges)}

    adj: dict[int, list[int]] = {}
    for u, v, _ in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union_cycle(vertices: list[int]) -> None:
        first = None
        for i in range(len(vertices)):
            a, b = vertices[i], vertices[(i + 1) % len(vertices)]
            e = index[(a, b) if (a, b) in index else (b, a)]
            if first is None:
                first = e
            else:
                ra, rb = find(first), find(e)
                if ra != rb:
                    parent[ra] = rb

    # Enumerate all simple cycles (length >= 3) once each.
    def extend(start: int, u: int, path: list[int]) -> None:
        for v in adj.get(u, ()):  # noqa: B905
            if v == start and len(path) >= 3:
                if path[1] < path[-1]:  # each cycle found once per direction
                    union_cycle(path)
            elif v > start and v not in path:
                path.append(v)
                extend(start, v, path)
                path.pop()

    for start in sorted(adj):
        extend(start, start, [start])
    groups: dict[int, set[int]] = {}
    for i, (u, v, _) in enumerate(edges):
        groups.setdefault(find(i), set()).update((u, v))
    return ComponentsOut(frozenset(frozenset(s) for s in groups.values()))


def _bfs_dists(adj: dict[int, list[int]], n: int, s: int) -> list[int]:
    dist = [-1] * n
    dist[s] = 0
    frontier = [s]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj.get(u, ()):
                if dist[v] == -1:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def _hc(g: Graph) -> ScoresOut:
    n = g.num_vertices
    adj: dict[int, list[int]] = {}
    for u, v, _ in _undirected_simple(g):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    scores = {}
    for v in range(n):
        dist = _bfs_dists(adj, n, v)
        scores[v] = sum(1.0 / d for u, d in enumerate(dist) if u != v and d > 0)
    return ScoresOut(scores)


def _neighborhoods(g: Graph) -> list[set[int]]:
    nbr: list[set[int]] = [set() for _ in range(g.num_vertices)]
    for u, v, _ in g.edges:
        nbr[u].add(v)
        nbr[v].add(u)
    return nbr


def _js(g: Graph) -> PairScoresOut:
    nbr = _neighborhoods(g)
    scores = {}
    for u in range(g.num_vertices):
        for v in range(u + 1, g.num_vertices):
            inter = len(nbr[u] & nbr[v])
            union = len(nbr[u] | nbr[v])
            scores[(u, v)] = inter / union if union else 0.0
    return PairScoresOut(scores)


def _aa(g: Graph) -> PairScoresOut:
    nbr = _neighborhoods(g)
    scores = {}
    for u in range(g.num_vertices):
        for v in range(u + 1, g.num_vertices):
            total = 0.0
            for w in sorted(nbr[u] & nbr[v]):
                if len(nbr[w]) > 1:
                    total += 1.0 / math.log(len(nbr[w]))
            scores[(u, v)] = total
    return PairScoresOut(scores)


def _mm(g: Graph) -> MatchingOut:
    """Maximum over all vertex-disjoint edge subsets (branch over edges)."""
    edges = [(min(u, v), max(u, v)) for u, v, _ in _undirected_simple(g)]

    def best_from(i: int, used: set[int], chosen: list) -> list:
        if i == len(edges):
            return list(chosen)
        # skip edge i
        best = best_from(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            used.update((u, v))
            chosen.append((u, v))
            cand = best_from(i + 1, used, chosen)
            chosen.pop()
            used.difference_update((u, v))
            if len(cand) > len(best):
                best = cand
        return best

    return MatchingOut(frozenset(best_from(0, set(), [])))


def _mfv(g: Graph, s: int, t: int) -> FlowOut:
    """Max-flow = min-cut: minimum capacity over all s-t vertex bipartitions."""
    if s == t:
        return FlowOut(0)
    n = g.num_vertices
    others = [v for v in range(n) if v not in (s, t)]
    best = None
    for r in range(len(others) + 1):
        for side in combinations(others, r):
            s_side = set(side) | {s}
            cut = sum(w for u, v, w in g.edges if u in s_side and v not in s_side)
            if best is None or cut < best:
                best = cut
    return FlowOut(best or 0)


def brute_force_oracle(problem: str, tin: TargetInput) -> TargetOutput:
    g = tin.graph
    _check_size(g)
    if problem == "spf":
        return _spf(g, tin.endpoints.s, tin.endpoints.t)
    if problem == "mst":
        return _mst(g)
    if problem == "scc":
        return _scc(g)
    if problem == "bcc":
        return _bcc(g)
    if problem == "hc":
        return _hc(g)
    if problem == "js":
        return _js(g)
    if problem == "aa":
        return _aa(g)
    if problem == "mm":
        return _mm(g)
    if problem == "mfv":
        return _mfv(g, tin.endpoints.s, tin.endpoints.t)
    raise ValueError(f"unknown problem {problem!r}")
