"""Max flow value: Dinitz (layered blocking flow) and FIFO push-relabel.

Capacities are the integer edge weights; the flow value is exact.  Both
implementations use fixed adjacency order, so results are deterministic.
"""

from __future__ import annotations

from collections import deque

from ..graph import Graph, EndpointPair
from ..outputs import FlowOut

INF = float("inf")


def _residual(g: Graph) -> tuple[list[list[int]], list[int], list[int]]:
    """Arc-based residual network: to[], cap[], adjacency of arc indices.

    Arc 2k is the forward copy of edge k, arc 2k^1 its reverse.
    """
    n = g.num_vertices
    to: list[int] = []
    cap: list[int] = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v, w in g.edges:
        if u == v:
            continue
        adj[u].append(len(to))
        to.append(v)
        cap.append(w)
        adj[v].append(len(to))
        to.append(u)
        cap.append(0)
    return adj, to, cap


def dinitz(g: Graph, ep: EndpointPair, probe=None) -> FlowOut:
    s, t = ep.s, ep.t
    if s == t:
        return FlowOut(0)
    n = g.num_vertices
    adj, to, cap = _residual(g)
    flow = 0
    while True:
        if probe:
            probe(0)
        level = [-1] * n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for a in adj[u]:
                if probe:
                    probe(1)
                if cap[a] > 0 and level[to[a]] == -1:
                    level[to[a]] = level[u] + 1
                    q.append(to[a])
        if level[t] == -1:
            break
        it = [0] * n

        def push(u: int, limit) -> int:
            if u == t:
                return limit
            while it[u] < len(adj[u]):
                if probe:
                    probe(2)
                a = adj[u][it[u]]
                v = to[a]
                if cap[a] > 0 and level[v] == level[u] + 1:
                    got = push(v, min(limit, cap[a]))
                    if got > 0:
                        cap[a] -= got
                        cap[a ^ 1] += got
                        return got
                it[u] += 1
            return 0

        while True:
            got = push(s, INF)
            if got == 0:
                break
            flow += got
    return FlowOut(int(flow))


def push_relabel(g: Graph, ep: EndpointPair, probe=None) -> FlowOut:
    s, t = ep.s, ep.t
    if s == t:
        return FlowOut(0)
    n = g.num_vertices
    adj, to, cap = _residual(g)
    height = [0] * n
    excess = [0] * n
    height[s] = n
    active: deque[int] = deque()
    in_queue = [False] * n
    for a in adj[s]:
        v = to[a]
        c = cap[a]
        if c > 0:
            cap[a] = 0
            cap[a ^ 1] += c
            excess[v] += c
            if v not in (s, t) and not in_queue[v]:
                in_queue[v] = True
                active.append(v)
    cur = [0] * n  # current-arc pointers
    while active:
        u = active.popleft()
        in_queue[u] = False
        # Discharge u completely.
        while excess[u] > 0:
            if cur[u] == len(adj[u]):
                # Relabel: one above the lowest residual neighbor.
                best = None
                for a in adj[u]:
                    if cap[a] > 0 and (best is None or height[to[a]] < best):
                        best = height[to[a]]
                if best is None:
                    break  # no residual arc at all: excess is permanently stuck
                height[u] = best + 1
                cur[u] = 0
                continue
            a = adj[u][cur[u]]
            v = to[a]
            if cap[a] > 0 and height[u] == height[v] + 1:
                d = min(excess[u], cap[a])
                cap[a] -= d
                cap[a ^ 1] += d
                excess[u] -= d
                excess[v] += d
                if v != s and v != t and not in_queue[v]:
                    in_queue[v] = True
                    active.append(v)
            else:
                cur[u] += 1
    return FlowOut(int(excess[t]))
