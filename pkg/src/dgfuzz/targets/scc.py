"""Strongly connected components: iterative Tarjan and Kosaraju."""

from __future__ import annotations

from ..graph import Graph, EndpointPair
from ..outputs import ComponentsOut


def _adjacency(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for u, v, _ in g.edges:
        adj[u].append(v)
    return adj


def tarjan_iterative(g: Graph, ep: EndpointPair, probe=None) -> ComponentsOut:
    n = g.num_vertices
    adj = _adjacency(g)
    UNSEEN = -1
    disc = [UNSEEN] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in range(n):
        if disc[root] != UNSEEN:
            continue
        if probe:
            probe(0)
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, i = work[-1]
            if i == 0:
                if probe:
                    probe(1)
                disc[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            av = adj[v]
            while i < len(av):
                w = av[i]
                i += 1
                if disc[w] == UNSEEN:
                    if probe:
                        probe(2)
                    work[-1] = (v, i)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    if probe:
                        probe(3)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    if probe:
                        probe(4)
                    low[parent] = low[v]
            if low[v] == disc[v]:
                if probe:
                    probe(5)
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    return ComponentsOut(frozenset(comps))


def kosaraju(g: Graph, ep: EndpointPair, probe=None) -> ComponentsOut:
    n = g.num_vertices
    adj = _adjacency(g)
    radj: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in g.edges:
        radj[v].append(u)
    # First pass: finish order on the forward graph.
    seen = [False] * n
    order: list[int] = []
    for root in range(n):
        if seen[root]:
            continue
        stack = [(root, 0)]
        seen[root] = True
        while stack:
            v, i = stack[-1]
            av = adj[v]
            advanced = False
            while i < len(av):
                w = av[i]
                i += 1
                if not seen[w]:
                    seen[w] = True
                    stack[-1] = (v, i)
                    stack.append((w, 0))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    # Second pass: collect components on the reverse graph.
    comp_of = [-1] * n
    comps: list[frozenset[int]] = []
    for v in reversed(order):
        if comp_of[v] != -1:
            continue
        members = [v]
        comp_of[v] = len(comps)
        todo = [v]
        while todo:
            u = todo.pop()
            for w in radj[u]:
                if comp_of[w] == -1:
                    comp_of[w] = len(comps)
                    members.append(w)
                    todo.append(w)
        comps.append(frozenset(members))
    return ComponentsOut(frozenset(comps))
