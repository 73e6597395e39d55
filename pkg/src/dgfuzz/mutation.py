"""Structure-preserving graph mutation operators and AFL-style stacking.

All operators are total: on degenerate inputs (single vertex, no edges, caps
reached) they return the input unchanged instead of raising.  Every operator
maps a profile-valid graph to a profile-valid graph, so invalid graphs can
never arise mid-stack.  The RNG is a :class:`random.Random` (Mersenne
Twister), which yields identical draw sequences for identical seeds on every
platform.
"""

from __future__ import annotations

import enum
import random
from typing import Callable, Optional

from .graph import Graph, GraphProfile, make_graph


class MutationKind(enum.Enum):
    ADD_VERTEX = "add_vertex"
    REMOVE_VERTEX = "remove_vertex"
    ADD_EDGE = "add_edge"
    REMOVE_EDGE = "remove_edge"
    UPDATE_WEIGHT = "update_weight"
    TRIM = "trim"
    COMBINE = "combine"


ALL_KINDS = tuple(MutationKind)


class DonorMissing(ValueError):
    pass


class _MutState:
    """Mutable working copy used while a stack of mutations is applied.

    ``edges`` maps the canonical endpoint pair (undirected: u <= v) to the
    weight.  Converted back to an immutable Graph once per stack.
    """

    __slots__ = ("directed", "n", "edges")

    def __init__(self, g: Graph):
        self.directed = g.directed
        self.n = g.num_vertices
        self.edges = {(u, v): w for u, v, w in g.edges}

    def to_graph(self) -> Graph:
        return make_graph(self.directed, self.n, [(u, v, w) for (u, v), w in self.edges.items()])

    def key(self, u: int, v: int) -> tuple[int, int]:
        if not self.directed and u > v:
            return (v, u)
        return (u, v)


def _pick_weight(p: GraphProfile, rng: random.Random) -> int:
    return rng.randint(p.weight_min, p.weight_max) if p.weighted else 1


def _candidate_count(n: int, p: GraphProfile) -> int:
    """Number of distinct endpoint pairs the profile permits on n vertices."""
    if p.require_bipartite:
        even = (n + 1) // 2
        return even * (n // 2)
    if p.directed:
        return n * n if p.allow_self_loops else n * (n - 1)
    return n * (n + 1) // 2 if p.allow_self_loops else n * (n - 1) // 2


def _decode_candidate(k: int, n: int, p: GraphProfile) -> tuple[int, int]:
    """Map a uniform index over the candidate space to an endpoint pair."""
    if p.require_bipartite:
        odd = n // 2
        return 2 * (k // odd), 1 + 2 * (k % odd)
    if p.directed:
        if p.allow_self_loops:
            return k // n, k % n
        u, r = divmod(k, n - 1)
        return u, r if r < u else r + 1
    # undirected: enumerate pairs (u, v) with u <= v (or u < v)
    if p.allow_self_loops:
        for u in range(n):
            row = n - u
            if k < row:
                return u, u + k
            k -= row
    else:
        for u in range(n):
            row = n - u - 1
            if k < row:
                return u, u + k + 1
            k -= row
    raise AssertionError("candidate index out of range")


def _add_vertex(st: _MutState, p: GraphProfile, rng: random.Random) -> None:
    if st.n < p.max_vertices:
        st.n += 1


def _relabel_after_removal(st: _MutState, victims: set[int], p: GraphProfile) -> None:
    remap = {}
    nxt = 0
    for v in range(st.n):
        if v not in victims:
            remap[v] = nxt
            nxt += 1
    new_edges = {}
    for (u, v), w in st.edges.items():
        if u in victims or v in victims:
            continue
        a, b = remap[u], remap[v]
        if not st.directed and a > b:
            a, b = b, a
        # Compaction can flip endpoint parity, so keep only edges the
        # bipartite constraint still admits.
        if p.require_bipartite and (a + b) % 2 == 0:
            continue
        new_edges[(a, b)] = w
    st.n = nxt
    st.edges = new_edges


def _remove_vertex(st: _MutState, p: GraphProfile, rng: random.Random) -> None:
    if st.n == 1:
        return
    _relabel_after_removal(st, {rng.randrange(st.n)}, p)


def _add_edge(st: _MutState, p: GraphProfile, rng: random.Random) -> None:
    total = _candidate_count(st.n, p)
    free = total - len(st.edges)
    if free <= 0 or len(st.edges) >= p.max_edges:
        return
    # Uniform over non-edges: rejection-sample uniform candidates, falling
    # back to explicit enumeration when the graph is nearly complete.
    for _ in range(64):
        u, v = _decode_candidate(rng.randrange(total), st.n, p)
        if st.key(u, v) not in st.edges:
            st.edges[st.key(u, v)] = _pick_weight(p, rng)
            return
    non_edges = [
        _decode_candidate(k, st.n, p)
        for k in range(total)
        if _decode_candidate(k, st.n, p) not in st.edges
    ]
    u, v = non_edges[rng.randrange(len(non_edges))]
    st.edges[st.key(u, v)] = _pick_weight(p, rng)


def _sorted_edge_keys(st: _MutState) -> list[tuple[int, int]]:
    return sorted(st.edges)


def _remove_edge(st: _MutState, p: GraphProfile, rng: random.Random) -> None:
    if not st.edges:
        return
    keys = _sorted_edge_keys(st)
    del st.edges[keys[rng.randrange(len(keys))]]


def _update_weight(st: _MutState, p: GraphProfile, rng: random.Random) -> None:
    if not st.edges or not p.weighted:
        return
    keys = _sorted_edge_keys(st)
    st.edges[keys[rng.randrange(len(keys))]] = _pick_weight(p, rng)


def _trim(st: _MutState, p: GraphProfile, rng: random.Random) -> None:
    k = rng.randint(1, max(1, st.n // 4))
    k = min(k, st.n - 1)
    if k <= 0:
        return
    _relabel_after_removal(st, set(rng.sample(range(st.n), k)), p)


def _combine(st: _MutState, donor: Graph, p: GraphProfile, rng: random.Random) -> None:
    base_n = st.n
    st.n += donor.num_vertices
    for u, v, w in donor.edges:
        st.edges[st.key(u + base_n, v + base_n)] = w
    # Truncate to caps by dropping highest-id vertices.
    while st.n > p.max_vertices or len(st.edges) > p.max_edges:
        victim = st.n - 1
        st.edges = {k: w for k, w in st.edges.items() if victim not in k}
        st.n -= 1
    # Bridge the two halves with up to 3 random edges; draws that land on an
    # existing edge or break the profile are skipped, not resampled.
    r = rng.randint(0, 3)
    for _ in range(r):
        if st.n <= base_n or len(st.edges) >= p.max_edges:
            break
        u = rng.randrange(base_n)
        v = base_n + rng.randrange(st.n - base_n)
        if rng.random() < 0.5 and st.directed:
            u, v = v, u
        if p.require_bipartite and (u + v) % 2 == 0:
            continue
        if st.key(u, v) in st.edges:
            continue
        st.edges[st.key(u, v)] = _pick_weight(p, rng)


def _apply(
    kind: MutationKind,
    st: _MutState,
    donor: Optional[Graph],
    p: GraphProfile,
    rng: random.Random,
) -> None:
    if kind is MutationKind.ADD_VERTEX:
        _add_vertex(st, p, rng)
    elif kind is MutationKind.REMOVE_VERTEX:
        _remove_vertex(st, p, rng)
    elif kind is MutationKind.ADD_EDGE:
        _add_edge(st, p, rng)
    elif kind is MutationKind.REMOVE_EDGE:
        _remove_edge(st, p, rng)
    elif kind is MutationKind.UPDATE_WEIGHT:
        _update_weight(st, p, rng)
    elif kind is MutationKind.TRIM:
        _trim(st, p, rng)
    elif kind is MutationKind.COMBINE:
        if donor is None:
            raise DonorMissing("Combine requires a donor graph")
        _combine(st, donor, p, rng)
    else:  # pragma: no cover
        raise AssertionError(kind)


def apply_mutation(
    kind: MutationKind,
    g: Graph,
    donor: Optional[Graph],
    p: GraphProfile,
    rng: random.Random,
) -> Graph:
    """Apply one operator; degenerate cases are no-ops, never errors."""
    st = _MutState(g)
    _apply(kind, st, donor, p, rng)
    return st.to_graph()


def stacked_mutate(
    g: Graph,
    corpus_sampler: Callable[[], Graph],
    p: GraphProfile,
    rng: random.Random,
    max_stack: int = 128,
) -> Graph:
    """Apply n = 2^(1+u), u ~ U{0..6}, operators in sequence (clamped to max_stack)."""
    n = min(2 ** (1 + rng.randrange(7)), max_stack)
    st = _MutState(g)
    for _ in range(n):
        kind = ALL_KINDS[rng.randrange(len(ALL_KINDS))]
        donor = corpus_sampler() if kind is MutationKind.COMBINE else None
        _apply(kind, st, donor, p, rng)
    return st.to_graph()
