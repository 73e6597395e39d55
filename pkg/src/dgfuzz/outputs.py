"""Target output domains, differential comparison, and the wire payload codec.

The payload strings double as the adapter protocol encoding and the
``output_a`` / ``output_b`` fields of ``report.json``, so the format is
stable: see :func:`encode_output`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph

SCORE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpfOut:
    status: str  # "length" | "unreachable" | "negative_cycle"
    length: Optional[int] = None

    def __post_init__(self) -> None:
        if self.status not in ("length", "unreachable", "negative_cycle"):
            raise ValueError(self.status)
        if (self.status == "length") != (self.length is not None):
            raise ValueError("length set iff status == length")


@dataclass(frozen=True)
class MstOut:
    edges: frozenset  # of (u, v, w)
    total_weight: int
    nodes: int


@dataclass(frozen=True)
class ComponentsOut:
    components: frozenset  # of frozenset[int]


@dataclass(frozen=True)
class ScoresOut:
    scores: dict = field(hash=False)  # vertex -> float


@dataclass(frozen=True)
class PairScoresOut:
    scores: dict = field(hash=False)  # (u, v) u < v -> float


@dataclass(frozen=True)
class MatchingOut:
    edges: frozenset  # of (u, v) with u < v


@dataclass(frozen=True)
class FlowOut:
    value: int


TargetOutput = Union[SpfOut, MstOut, ComponentsOut, ScoresOut, PairScoresOut, MatchingOut, FlowOut]


@dataclass(frozen=True)
class Crash:
    message: str


@dataclass(frozen=True)
class Hang:
    pass


Outcome = Union[SpfOut, MstOut, ComponentsOut, ScoresOut, PairScoresOut, MatchingOut, FlowOut, Crash, Hang]


def is_failure(o: Outcome) -> bool:
    return isinstance(o, (Crash, Hang))


# --- structural validity helpers -----------------------------------------


def undirected_components(g: Graph) -> list[set[int]]:
    """Connected components of the graph ignoring edge direction."""
    parent = list(range(g.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comps: dict[int, set[int]] = {}
    for v in range(g.num_vertices):
        comps.setdefault(find(v), set()).add(v)
    return list(comps.values())


def is_forest(edges) -> bool:
    """Acyclicity check for an undirected edge set (cheap union-find)."""
    ids: dict[int, int] = {}
    parent: list[int] = []

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, *_ in edges:
        for z in (u, v):
            if z not in ids:
                ids[z] = len(parent)
                parent.append(len(parent))
        ru, rv = find(ids[u]), find(ids[v])
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def mst_validity_error(out: MstOut, g: Optional[Graph]) -> Optional[str]:
    """Check one side's spanning-forest validity (minimality is not required
    here; trees may legitimately differ between implementations)."""
    if not is_forest(out.edges):
        return "MST edge set contains a cycle"
    if sum(w for _, _, w in out.edges) != out.total_weight:
        return "MST total weight disagrees with its edge set"
    if g is not None:
        edge_set = {(u, v) for u, v, _ in g.edges}
        for u, v, w in out.edges:
            if (u, v) not in edge_set and (v, u) not in edge_set:
                return f"MST edge ({u}, {v}) not in graph"
        comp_count = len(undirected_components(g))
        if g.num_vertices - len(out.edges) != comp_count:
            return "MST edge count does not span every component"
    return None


def matching_validity_error(out: MatchingOut) -> Optional[str]:
    used: set[int] = set()
    for u, v in out.edges:
        if u in used or v in used:
            return f"matching reuses a vertex in ({u}, {v})"
        used.add(u)
        used.add(v)
    return None


# --- differential comparison ----------------------------------------------


def _canon_components(out: ComponentsOut) -> list[tuple[int, ...]]:
    return sorted(tuple(sorted(c)) for c in out.components)


def _compare_score_maps(a: dict, b: dict) -> Optional[str]:
    if a.keys() != b.keys():
        missing = a.keys() ^ b.keys()
        return f"score maps disagree on keys: {sorted(missing)[:5]}"
    for k in a:
        if abs(a[k] - b[k]) > SCORE_TOLERANCE:
            return f"score mismatch at {k}: {a[k]!r} vs {b[k]!r}"
    return None


def compare_outputs(
    problem: str, o: TargetOutput, o2: TargetOutput, graph: Optional[Graph] = None
) -> Optional[str]:
    """None when equal per the problem's rule, else a human-readable reason.

    Both outputs must come from the same problem on the same input.  Passing
    the graph tightens the MST check (spanning verification).
    """
    if type(o) is not type(o2):
        raise TypeError(f"comparing outputs of different shapes: {type(o)} vs {type(o2)}")
    if problem == "spf":
        if o != o2:
            return f"SPF outputs differ: {encode_output(problem, o)} vs {encode_output(problem, o2)}"
        return None
    if problem == "mfv":
        if o.value != o2.value:
            return f"flow values differ: {o.value} vs {o2.value}"
        return None
    if problem == "mst":
        for side, m in (("A", o), ("B", o2)):
            err = mst_validity_error(m, graph)
            if err:
                return f"side {side}: {err}"
        if o.total_weight != o2.total_weight:
            return f"MST weights differ: {o.total_weight} vs {o2.total_weight}"
        if o.nodes != o2.nodes:
            return f"MST node counts differ: {o.nodes} vs {o2.nodes}"
        return None
    if problem in ("scc", "bcc"):
        ca, cb = _canon_components(o), _canon_components(o2)
        if ca != cb:
            return f"component sets differ: {ca[:4]}... vs {cb[:4]}..."
        return None
    if problem == "mm":
        for side, m in (("A", o), ("B", o2)):
            err = matching_validity_error(m)
            if err:
                return f"side {side}: {err}"
        if len(o.edges) != len(o2.edges):
            return f"matching cardinalities differ: {len(o.edges)} vs {len(o2.edges)}"
        return None
    if problem in ("hc", "js", "aa"):
        return _compare_score_maps(o.scores, o2.scores)
    raise ValueError(f"unknown problem {problem!r}")


# --- wire payload codec -----------------------------------------------------


def _fmt_float(x: float) -> str:
    return repr(float(x))


def encode_output(problem: str, out: TargetOutput) -> str:
    """One-line payload; floats use repr (round-trips exactly)."""
    if problem == "spf":
        return f"length {out.length}" if out.status == "length" else out.status
    if problem == "mfv":
        return f"flow {out.value}"
    if problem in ("scc", "bcc"):
        comps = _canon_components(out)
        body = ",".join("{" + ",".join(map(str, c)) + "}" for c in comps)
        return f"components {len(comps)}; {body}"
    if problem == "mst":
        edges = sorted(out.edges)
        body = ",".join(f"{u}-{v}:{w}" for u, v, w in edges)
        return f"mst {out.total_weight} {out.nodes}; {body}"
    if problem == "hc":
        body = ",".join(f"{v}:{_fmt_float(s)}" for v, s in sorted(out.scores.items()))
        return f"scores {len(out.scores)}; {body}"
    if problem in ("js", "aa"):
        body = ",".join(f"{u}-{v}:{_fmt_float(s)}" for (u, v), s in sorted(out.scores.items()))
        return f"pairscores {len(out.scores)}; {body}"
    if problem == "mm":
        body = ",".join(f"{u}-{v}" for u, v in sorted(out.edges))
        return f"matching {len(out.edges)}; {body}"
    raise ValueError(f"unknown problem {problem!r}")


class PayloadError(ValueError):
    pass


def _split_payload(payload: str, tag: str, n_head: int) -> tuple[list[str], list[str]]:
    head, sep, rest = payload.partition(";")
    parts = head.split()
    if not sep or len(parts) != n_head + 1 or parts[0] != tag:
        raise PayloadError(f"malformed {tag} payload: {payload!r}")
    rest = rest.strip()
    items = rest.split(",") if rest else []
    return parts[1:], items


def decode_output(problem: str, payload: str) -> TargetOutput:
    """Inverse of :func:`encode_output`; raises PayloadError on malformed input."""
    payload = payload.strip()
    try:
        if problem == "spf":
            if payload in ("unreachable", "negative_cycle"):
                return SpfOut(payload)
            tag, _, val = payload.partition(" ")
            if tag != "length":
                raise PayloadError(f"malformed spf payload: {payload!r}")
            return SpfOut("length", int(val))
        if problem == "mfv":
            tag, _, val = payload.partition(" ")
            if tag != "flow":
                raise PayloadError(f"malformed mfv payload: {payload!r}")
            return FlowOut(int(val))
        if problem in ("scc", "bcc"):
            head, sep, rest = payload.partition(";")
            parts = head.split()
            if not sep or len(parts) != 2 or parts[0] != "components":
                raise PayloadError(f"malformed components payload: {payload!r}")
            rest = rest.strip()
            comps = []
            if rest:
                # component bodies contain commas, so split on the braces
                if not (rest.startswith("{") and rest.endswith("}")):
                    raise PayloadError(f"malformed component list: {rest!r}")
                for item in rest[1:-1].split("},{"):
                    comps.append(frozenset(int(x) for x in item.split(",") if x))
            if len(comps) != int(parts[1]):
                raise PayloadError("component count mismatch")
            return ComponentsOut(frozenset(comps))
        if problem == "mst":
            (w, n), items = _split_payload(payload, "mst", 2)
            edges = set()
            for item in items:
                uv, _, wt = item.partition(":")
                u, _, v = uv.partition("-")
                edges.add((int(u), int(v), int(wt)))
            return MstOut(frozenset(edges), int(w), int(n))
        if problem == "hc":
            (k,), items = _split_payload(payload, "scores", 1)
            scores = {}
            for item in items:
                v, _, s = item.partition(":")
                scores[int(v)] = float(s)
            if len(scores) != int(k):
                raise PayloadError("score count mismatch")
            return ScoresOut(scores)
        if problem in ("js", "aa"):
            (k,), items = _split_payload(payload, "pairscores", 1)
            scores = {}
            for item in items:
                uv, _, s = item.partition(":")
                u, _, v = uv.partition("-")
                scores[(int(u), int(v))] = float(s)
            if len(scores) != int(k):
                raise PayloadError("score count mismatch")
            return PairScoresOut(scores)
        if problem == "mm":
            (k,), items = _split_payload(payload, "matching", 1)
            edges = set()
            for item in items:
                u, _, v = item.partition("-")
                edges.add((int(u), int(v)))
            if len(edges) != int(k):
                raise PayloadError("matching count mismatch")
            return MatchingOut(frozenset(edges))
    except PayloadError:
        raise
    except ValueError as e:
        raise PayloadError(f"malformed {problem} payload {payload!r}: {e}") from e
    raise ValueError(f"unknown problem {problem!r}")
