"""Graph data model, canonical text format, profile validation, endpoint derivation.

The graph is the sole corpus element of the fuzzer.  Everything here is an
immutable value type; operations are pure functions.  The text format defined
by :func:`serialize` / :func:`parse` is the on-disk seed-corpus format
(``*.graph`` files) and the wire format of the adapter protocol, so it is
normative: one header line ``D N M`` or ``U N M``, then ``M`` lines ``u v w``
in canonical edge order, newline-terminated, ASCII decimal, single spaces.
"""

from __future__ import annotations

from dataclasses import dataclass


class GraphError(ValueError):
    """Base class for graph construction/parsing errors."""


class MalformedHeader(GraphError):
    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: malformed header: {detail}")
        self.line_no = line_no


class MalformedEdgeLine(GraphError):
    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: malformed edge line: {detail}")
        self.line_no = line_no


class VertexOutOfRange(GraphError):
    def __init__(self, line_no: int, vertex: int, n: int):
        super().__init__(f"line {line_no}: vertex {vertex} out of range [0, {n})")
        self.line_no = line_no


class DuplicateEdge(GraphError):
    def __init__(self, line_no: int, u: int, v: int):
        super().__init__(f"line {line_no}: duplicate edge ({u}, {v})")
        self.line_no = line_no


class CountMismatch(GraphError):
    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no


class EmptyGraph(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """A simple graph with integer edge weights.

    Vertices are the ids ``0..num_vertices-1``.  ``edges`` is kept sorted by
    ``(u, v)``; undirected edges are normalized so ``u <= v``.  Construct
    through :func:`make_graph`, which canonicalizes and checks the
    invariants.
    """

    directed: bool
    num_vertices: int
    edges: tuple[tuple[int, int, int], ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class EndpointPair:
    """Source/target vertices derived deterministically from a graph."""

    s: int
    t: int


@dataclass(frozen=True)
class GraphProfile:
    """Per-problem validity constraints that mutation must preserve.

    ``require_bipartite`` uses vertex-id parity as the partition: every edge
    must connect an even id to an odd id.  If ``weighted`` is false, all
    weights must equal 1.
    """

    directed: bool
    weighted: bool
    weight_min: int
    weight_max: int
    allow_self_loops: bool
    require_bipartite: bool = False
    max_vertices: int = 64
    max_edges: int = 512

    def __post_init__(self) -> None:
        if self.weight_min > self.weight_max:
            raise ValueError("weight_min > weight_max")
        if not self.weighted and (self.weight_min, self.weight_max) != (1, 1):
            raise ValueError("unweighted profile must pin weights to 1")
        if self.max_vertices < 1 or self.max_edges < 0:
            raise ValueError("caps must be positive")


@dataclass(frozen=True)
class Violation:
    constraint: str
    detail: str


def make_graph(
    directed: bool, num_vertices: int, edges, *, allow_self_loops: bool = True
) -> Graph:
    """Build a canonical :class:`Graph`, normalizing and checking invariants."""
    if num_vertices < 0:
        raise GraphError("negative vertex count")
    canon = []
    seen = set()
    for u, v, w in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise VertexOutOfRange(0, u if not 0 <= u < num_vertices else v, num_vertices)
        if u == v and not allow_self_loops:
            raise GraphError(f"self-loop ({u}, {v}) not allowed")
        if not directed and u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdge(0, u, v)
        seen.add((u, v))
        canon.append((u, v, int(w)))
    canon.sort()
    return Graph(directed, num_vertices, tuple(canon))


def serialize(g: Graph) -> str:
    """Canonical, bit-exact text form.  ``parse(serialize(g)) == g``."""
    head = f"{'D' if g.directed else 'U'} {g.num_vertices} {g.num_edges}\n"
    return head + "".join(f"{u} {v} {w}\n" for u, v, w in g.edges)


def parse(text: str) -> Graph:
    """Inverse of :func:`serialize`; validates counts, ranges and duplicates."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedHeader(1, "empty input")
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] not in ("D", "U"):
        raise MalformedHeader(1, repr(lines[0]))
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise MalformedHeader(1, repr(lines[0])) from None
    if n < 0 or m < 0:
        raise MalformedHeader(1, "negative counts")
    if len(lines) - 1 != m:
        raise CountMismatch(len(lines), f"header declares {m} edges, body has {len(lines) - 1}")
    directed = head[0] == "D"
    edges = []
    seen: set[tuple[int, int]] = set()
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 3:
            raise MalformedEdgeLine(i, repr(line))
        try:
            u, v, w = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise MalformedEdgeLine(i, repr(line)) from None
        if not 0 <= u < n:
            raise VertexOutOfRange(i, u, n)
        if not 0 <= v < n:
            raise VertexOutOfRange(i, v, n)
        key = (u, v) if directed or u <= v else (v, u)
        if key in seen:
            raise DuplicateEdge(i, u, v)
        seen.add(key)
        edges.append((u, v, w))
    return make_graph(directed, n, edges)


def validate(g: Graph, p: GraphProfile) -> list[Violation]:
    """Empty list iff ``g`` satisfies every constraint of the profile."""
    out = []
    if g.directed != p.directed:
        out.append(Violation("Directedness", f"graph directed={g.directed}, profile requires {p.directed}"))
    if g.num_vertices > p.max_vertices:
        out.append(Violation("MaxVertices", f"{g.num_vertices} > {p.max_vertices}"))
    if g.num_edges > p.max_edges:
        out.append(Violation("MaxEdges", f"{g.num_edges} > {p.max_edges}"))
    for u, v, w in g.edges:
        if u == v and not p.allow_self_loops:
            out.append(Violation("SelfLoop", f"edge ({u}, {v})"))
        if p.weighted:
            if not p.weight_min <= w <= p.weight_max:
                out.append(Violation("WeightRange", f"edge ({u}, {v}) weight {w} outside [{p.weight_min}, {p.weight_max}]"))
        elif w != 1:
            out.append(Violation("WeightRange", f"edge ({u}, {v}) weight {w} != 1 on unweighted profile"))
        if p.require_bipartite and (u + v) % 2 == 0:
            out.append(Violation("Bipartite", f"edge ({u}, {v}) joins same-parity ids"))
    return out


def degrees(g: Graph) -> list[int]:
    """Incident endpoint counts; directed = in + out; a self-loop counts 2."""
    deg = [0] * g.num_vertices
    for u, v, _ in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def derive_endpoints(g: Graph) -> EndpointPair:
    """Deterministic (s, t): the two highest-degree vertices, lowest id on ties."""
    if g.num_vertices == 0:
        raise EmptyGraph("cannot derive endpoints of an empty graph")
    if g.num_vertices == 1:
        return EndpointPair(0, 0)
    deg = degrees(g)
    s = max(range(g.num_vertices), key=lambda v: (deg[v], -v))
    t = max((v for v in range(g.num_vertices) if v != s), key=lambda v: (deg[v], -v))
    return EndpointPair(s, t)
