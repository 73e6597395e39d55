"""Reference implementations of the nine graph problems under test.

Each problem carries a fixed input profile and at least two independently
coded implementations (no shared core routine within a pair).  The first
implementation of each default pair is the coverage-bearing side A and is the
one instrumented with explicit probe call sites.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, EndpointPair, GraphProfile

from . import spf, mst, scc, bcc, hc, similarity, mm, mfv

PROBLEMS = ("spf", "mst", "scc", "bcc", "hc", "js", "mm", "aa", "mfv")

# Per-problem validity profiles.  SPF allows negative weights so the
# negative/zero-cycle class is reachable; similarity problems allow
# self-loops because two of the recreated bug classes are self-loop bugs.
# Caps are tuned per problem so that desk-scale campaigns keep their
# throughput targets (the bug classes all trigger on small graphs).
PROFILES: dict[str, GraphProfile] = {
    "spf": GraphProfile(True, True, -8, 64, False, max_vertices=48, max_edges=256),
    "mst": GraphProfile(False, True, 1, 64, False, max_vertices=48, max_edges=256),
    "scc": GraphProfile(True, False, 1, 1, False, max_vertices=48, max_edges=256),
    "bcc": GraphProfile(False, False, 1, 1, False, max_vertices=32, max_edges=128),
    "hc": GraphProfile(False, False, 1, 1, False, max_vertices=32, max_edges=128),
    "js": GraphProfile(False, False, 1, 1, True, max_vertices=32, max_edges=128),
    "mm": GraphProfile(False, False, 1, 1, False, require_bipartite=True, max_vertices=32, max_edges=128),
    "aa": GraphProfile(False, False, 1, 1, True, max_vertices=32, max_edges=128),
    "mfv": GraphProfile(True, True, 1, 64, False, max_vertices=32, max_edges=128),
}

IMPLS = {
    "spf": {
        "bellman_ford": spf.bellman_ford,
        "goldberg_radzik": spf.goldberg_radzik,
        "dijkstra": spf.dijkstra,
    },
    "mst": {
        "prim": mst.prim,
        "kruskal": mst.kruskal,
        "boruvka": mst.boruvka,
    },
    "scc": {
        "tarjan_iterative": scc.tarjan_iterative,
        "kosaraju": scc.kosaraju,
    },
    "bcc": {
        "hopcroft_tarjan": bcc.hopcroft_tarjan,
        "brute_blocks": bcc.brute_blocks,
    },
    "hc": {
        "bfs_per_source": hc.bfs_per_source,
        "all_pairs_floyd": hc.all_pairs_floyd,
    },
    "js": {
        "sorted_merge": similarity.js_sorted_merge,
        "bitset_intersect": similarity.js_bitset_intersect,
    },
    "mm": {
        "hopcroft_karp": mm.hopcroft_karp,
        "augmenting_path": mm.augmenting_path,
    },
    "aa": {
        "per_pair_intersect": similarity.aa_per_pair_intersect,
        "precomputed_neighborhoods": similarity.aa_precomputed_neighborhoods,
    },
    "mfv": {
        "dinitz": mfv.dinitz,
        "push_relabel": mfv.push_relabel,
    },
}

DEFAULT_PAIRS = {
    "spf": ("bellman_ford", "goldberg_radzik"),
    "mst": ("prim", "kruskal"),
    "scc": ("tarjan_iterative", "kosaraju"),
    "bcc": ("hopcroft_tarjan", "brute_blocks"),
    "hc": ("bfs_per_source", "all_pairs_floyd"),
    "js": ("sorted_merge", "bitset_intersect"),
    "mm": ("hopcroft_karp", "augmenting_path"),
    "aa": ("per_pair_intersect", "precomputed_neighborhoods"),
    "mfv": ("dinitz", "push_relabel"),
}

# Implementations that cannot accept negative weights; when one of these is
# in the differential pair, the SPF profile tightens to non-negative weights.
NON_NEGATIVE_ONLY = {"dijkstra"}


@dataclass(frozen=True)
class TargetInput:
    graph: Graph
    endpoints: EndpointPair


def profile_for(problem: str, *impl_names: str) -> GraphProfile:
    """The problem's profile, tightened for the participating implementations."""
    p = PROFILES[problem]
    if any(name in NON_NEGATIVE_ONLY for name in impl_names) and p.weight_min < 0:
        p = GraphProfile(
            p.directed, p.weighted, 0, p.weight_max, p.allow_self_loops,
            p.require_bipartite, p.max_vertices, p.max_edges,
        )
    return p
