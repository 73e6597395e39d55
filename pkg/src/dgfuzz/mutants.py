"""Fault-injection catalog: deliberately defective variants of targets.

Each mutant copies its parent implementation and introduces exactly one
localized defect (marked ``DEFECT`` inline).  Every defect triggers only on
graph features the seed generator never emits (self-loops, antiparallel
directed edge pairs, zero-weight cycles, deep union-by-rank ties), so mutants
agree with their parents on the initial corpus and must be found by fuzzing.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from math import inf, log

from .graph import Graph, EndpointPair
from .outputs import ComponentsOut, FlowOut, MstOut, PairScoresOut, SpfOut
from .targets.mfv import _residual


class MutantId(Enum):
    GR_ZERO_CYCLE = "GR_ZERO_CYCLE"
    SCC_STACK_SKIP = "SCC_STACK_SKIP"
    JS_IGNORE_SELF_LOOP = "JS_IGNORE_SELF_LOOP"
    MFV_HANG = "MFV_HANG"
    AA_SELF_LOOP_WRONG = "AA_SELF_LOOP_WRONG"
    MST_UF_OFF_BY_ONE = "MST_UF_OFF_BY_ONE"


class MutantProblemMismatch(ValueError):
    pass


def gr_zero_cycle(g: Graph, ep: EndpointPair, probe=None) -> SpfOut:
    """goldberg_radzik with the DFS admissibility comparison relaxed to <=.

    A cycle of admissible-by-<= edges has total weight <= 0, so a reachable
    zero-weight cycle is misreported as a negative cycle.
    """
    n = g.num_vertices
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, w in g.edges:
        adj[u].append((v, w))
    dist = [inf] * n
    dist[ep.s] = 0
    relabeled = [ep.s]
    phases = 0
    while relabeled:
        phases += 1
        if phases > n:
            return SpfOut("negative_cycle")
        color = [0] * n
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
                    if du is not inf and du + w <= dist[v]:  # DEFECT: <= instead of <
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


def scc_stack_skip(g: Graph, ep: EndpointPair, probe=None) -> ComponentsOut:
    """tarjan_iterative that drops the low-link update on reciprocated back
    edges, splitting components held together by antiparallel pairs."""
    n = g.num_vertices
    adj: list[list[int]] = [[] for _ in range(n)]
    edge_set = set()
    for u, v, _ in g.edges:
        adj[u].append(v)
        edge_set.add((u, v))
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
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, i = work[-1]
            if i == 0:
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
                    work[-1] = (v, i)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    if (w, v) in edge_set:  # DEFECT: skip update on reciprocated edges
                        continue
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == disc[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    return ComponentsOut(frozenset(comps))


def js_ignore_self_loop(g: Graph, ep: EndpointPair, probe=None) -> PairScoresOut:
    """js_sorted_merge that drops self-loops when building neighbor lists."""
    n = g.num_vertices
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in g.edges:
        if u == v:  # DEFECT: self-loop ignored, N(v) loses v itself
            continue
        lists[u].append(v)
        lists[v].append(u)
    for l in lists:
        l.sort()
    scores: dict[tuple[int, int], float] = {}
    for u in range(n):
        au = lists[u]
        for v in range(u + 1, n):
            av = lists[v]
            i = j = inter = 0
            while i < len(au) and j < len(av):
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


# Livelock safety ceiling: far beyond what a 5 s budget allows, so a
# triggered run is classified Hang, but a budget-less direct call still ends.
MFV_HANG_CEILING = 200_000_000


def mfv_hang(g: Graph, ep: EndpointPair, probe=None) -> FlowOut:
    """push_relabel that relabels to the minimum neighbor height (missing +1)
    on vertices incident to an antiparallel edge pair: no push ever becomes
    admissible there again, so the discharge loop livelocks."""
    s, t = ep.s, ep.t
    if s == t:
        return FlowOut(0)
    n = g.num_vertices
    adj, to, cap = _residual(g)
    pairs = {(u, v) for u, v, _ in g.edges}
    broken = [False] * n
    for u, v in pairs:
        if (v, u) in pairs and u != v:
            broken[u] = broken[v] = True
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
    cur = [0] * n
    steps = 0
    while active:
        u = active.popleft()
        in_queue[u] = False
        while excess[u] > 0:
            steps += 1
            if steps > MFV_HANG_CEILING:
                raise RuntimeError("relabel ceiling exceeded")
            if cur[u] == len(adj[u]):
                best = None
                for a in adj[u]:
                    if cap[a] > 0 and (best is None or height[to[a]] < best):
                        best = height[to[a]]
                if best is None:
                    break
                # DEFECT: missing +1 when u touches an antiparallel pair
                height[u] = best if broken[u] else best + 1
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


def aa_self_loop_wrong(g: Graph, ep: EndpointPair, probe=None) -> PairScoresOut:
    """aa_per_pair_intersect that excludes the vertex itself from its own
    neighborhood size, misweighting common neighbors that carry self-loops."""
    n = g.num_vertices
    nbr: list[set[int]] = [set() for _ in range(n)]
    for u, v, _ in g.edges:
        nbr[u].add(v)
        nbr[v].add(u)
    scores: dict[tuple[int, int], float] = {}
    for u in range(n):
        for v in range(u + 1, n):
            total = 0.0
            for w in sorted(nbr[u] & nbr[v]):
                deg = len(nbr[w] - {w})  # DEFECT: self-membership dropped from degree
                if deg > 1:
                    total += 1.0 / log(deg)
            scores[(u, v)] = total
    return PairScoresOut(scores)


# Rank depth at which the defective tie-union kicks in.  Reaching a tie of
# two rank-2 trees needs at least 8 vertices merged in a particular order,
# which never happens on the small generated seed graphs.
MST_TIE_RANK = 2


def mst_uf_off_by_one(g: Graph, ep: EndpointPair, probe=None) -> MstOut:
    """kruskal whose union-by-rank merges the wrong root on deep ties: the
    components stay separate, so a later edge closes a cycle in the output."""
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
        elif rank[ru] >= MST_TIE_RANK:
            parent[ru] = ru  # DEFECT: self-link; rv is never attached
            rank[ru] += 1
        else:
            parent[rv] = ru
            rank[ru] += 1
        forest.append((u, v, w) if u <= v else (v, u, w))
        total += w
    return MstOut(frozenset(forest), total, n)


_CATALOG: dict[MutantId, tuple[str, str, object]] = {
    MutantId.GR_ZERO_CYCLE: ("spf", "goldberg_radzik", gr_zero_cycle),
    MutantId.SCC_STACK_SKIP: ("scc", "tarjan_iterative", scc_stack_skip),
    MutantId.JS_IGNORE_SELF_LOOP: ("js", "sorted_merge", js_ignore_self_loop),
    MutantId.MFV_HANG: ("mfv", "push_relabel", mfv_hang),
    MutantId.AA_SELF_LOOP_WRONG: ("aa", "per_pair_intersect", aa_self_loop_wrong),
    MutantId.MST_UF_OFF_BY_ONE: ("mst", "kruskal", mst_uf_off_by_one),
}


def mutant_problem(m: MutantId) -> str:
    return _CATALOG[m][0]


def mutant_parent(m: MutantId) -> str:
    return _CATALOG[m][1]


def instantiate(problem: str, m: MutantId):
    """Drop-in replacement for the mutant's parent implementation."""
    expected, _, fn = _CATALOG[m]
    if problem != expected:
        raise MutantProblemMismatch(f"{m.value} belongs to {expected!r}, not {problem!r}")
    return fn
