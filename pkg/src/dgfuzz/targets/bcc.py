"""Biconnected components (blocks), as edge-induced vertex sets.

Bridges form two-vertex blocks; isolated vertices belong to no block.  The
two implementations are independent: a lowpoint DFS with an edge stack, and
a vertex-removal grouping that unions adjacent edges whose far endpoints stay
connected when the shared vertex is deleted.
"""

from __future__ import annotations

from ..graph import Graph, EndpointPair
from ..outputs import ComponentsOut


def hopcroft_tarjan(g: Graph, ep: EndpointPair, probe=None) -> ComponentsOut:
    n = g.num_vertices
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (neighbor, edge id)
    for eid, (u, v, _) in enumerate(g.edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    UNSEEN = -1
    disc = [UNSEEN] * n
    low = [0] * n
    counter = 0
    edge_stack: list[int] = []
    blocks: list[frozenset[int]] = []
    edges = g.edges

    def emit(upto: int) -> None:
        members: set[int] = set()
        while edge_stack:
            eid = edge_stack.pop()
            u, v, _ = edges[eid]
            members.add(u)
            members.add(v)
            if eid == upto:
                break
        if members:
            blocks.append(frozenset(members))

    for root in range(n):
        if disc[root] != UNSEEN:
            continue
        if probe:
            probe(0)
        # frame: (vertex, adjacency index, parent edge id)
        work: list[list[int]] = [[root, 0, -1]]
        while work:
            frame = work[-1]
            v, i, pe = frame
            if i == 0:
                if probe:
                    probe(1)
                disc[v] = low[v] = counter
                counter += 1
            advanced = False
            av = adj[v]
            while i < len(av):
                w, eid = av[i]
                i += 1
                if eid == pe:
                    continue
                if disc[w] == UNSEEN:
                    if probe:
                        probe(2)
                    edge_stack.append(eid)
                    frame[1] = i
                    work.append([w, 0, eid])
                    advanced = True
                    break
                if disc[w] < disc[v]:  # back edge (or toward an ancestor)
                    if probe:
                        probe(3)
                    edge_stack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            frame[1] = i
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    # parent is an articulation point (or the root): the
                    # edges above the tree edge (parent, v) form one block.
                    if probe:
                        probe(4)
                    emit(pe)
    return ComponentsOut(frozenset(blocks))


def brute_blocks(g: Graph, ep: EndpointPair, probe=None) -> ComponentsOut:
    """Union adjacent edges (u,v),(v,w) iff u and w stay connected in G - v."""
    n = g.num_vertices
    m = g.num_edges
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v, _) in enumerate(g.edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comp = [0] * n
    for v in range(n):
        if len(adj[v]) < 2:
            continue
        # Label connected components of G - v.
        for i in range(n):
            comp[i] = -1
        for start in range(n):
            if start == v or comp[start] != -1:
                continue
            comp[start] = start
            todo = [start]
            while todo:
                u = todo.pop()
                for w, _ in adj[u]:
                    if w != v and comp[w] == -1:
                        comp[w] = start
                        todo.append(w)
        # Group v's incident edges by the component of their far endpoint.
        rep: dict[int, int] = {}
        for w, eid in adj[v]:
            c = comp[w]
            if c in rep:
                ra, rb = find(rep[c]), find(eid)
                if ra != rb:
                    parent[ra] = rb
            else:
                rep[c] = eid
    groups: dict[int, set[int]] = {}
    for eid, (u, v, _) in enumerate(g.edges):
        groups.setdefault(find(eid), set()).update((u, v))
    return ComponentsOut(frozenset(frozenset(s) for s in groups.values()))
