"""Black-box adapter exposing networkx SPF and SCC behind wire protocol v1.

The process handshakes with ``GRAPHFUZZ-ADAPTER 1 spf scc`` and then serves
framed requests from standard input: each message is the decimal byte length,
a newline, and the UTF-8 body.  Request bodies are
``REQ <id> <problem> <s> <t>\\n<graph text>``; responses are
``RESP <id> <ok|crash> <payload>``.

Outcome mapping for SPF (networkx exceptions to protocol sentinels):

    NetworkXUnbounded (negative cycle reachable from s)  ->  "negative_cycle"
    t absent from the source's distance map              ->  "unreachable"
    otherwise                                            ->  "length <int>"

Any other exception while handling a request (malformed graph text included)
becomes a ``crash`` response and the process stays alive.  EOF on stdin is a
clean exit.  This module deliberately has no dependency on the fuzzer
package; it speaks only the wire formats.
"""

from __future__ import annotations

import sys

import networkx as nx

PROTOCOL_VERSION = 1
PROBLEMS = ("spf", "scc")
HANDSHAKE = f"GRAPHFUZZ-ADAPTER {PROTOCOL_VERSION} {' '.join(PROBLEMS)}\n"

__version__ = "0.1.0"


def parse_graph(text: str) -> nx.DiGraph:
    """Canonical graph text to a DiGraph (undirected edges added both ways)."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("empty graph block")
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] not in ("D", "U"):
        raise ValueError(f"bad header: {lines[0]!r}")
    n, m = int(head[1]), int(head[2])
    if n < 1 or m != len(lines) - 1:
        raise ValueError(f"header promises {m} edges, block has {len(lines) - 1}")
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    for line in lines[1:]:
        u, v, w = (int(x) for x in line.split(" "))
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: {line!r}")
        g.add_edge(u, v, weight=w)
        if head[0] == "U":
            g.add_edge(v, u, weight=w)
    return g


def solve_spf(g: nx.DiGraph, s: int, t: int) -> str:
    try:
        dist = nx.single_source_bellman_ford_path_length(g, s)
    except nx.NetworkXUnbounded:
        return "negative_cycle"
    if t not in dist:
        return "unreachable"
    return f"length {int(dist[t])}"


def solve_scc(g: nx.DiGraph) -> str:
    comps = sorted(tuple(sorted(c)) for c in nx.strongly_connected_components(g))
    body = ",".join("{" + ",".join(map(str, c)) + "}" for c in comps)
    return f"components {len(comps)}; {body}"


def frame(body: str) -> bytes:
    data = body.encode("utf-8")
    return f"{len(data)}\n".encode("ascii") + data


def handle_request(body: str) -> str:
    """One request body to one response body; never raises on bad requests."""
    head, _, graph_text = body.partition("\n")
    parts = head.split(" ")
    req_id = parts[1] if len(parts) > 1 and parts[1].isdigit() else "0"
    try:
        if len(parts) != 5 or parts[0] != "REQ":
            raise ValueError(f"malformed request head: {head!r}")
        problem = parts[2]
        if problem not in PROBLEMS:
            raise ValueError(f"unsupported problem {problem!r}")
        g = parse_graph(graph_text)
        s, t = int(parts[3]), int(parts[4])
        if problem == "spf":
            if not (0 <= s < g.number_of_nodes() and 0 <= t < g.number_of_nodes()):
                raise ValueError(f"endpoints ({s}, {t}) out of range")
            payload = solve_spf(g, s, t)
        else:
            payload = solve_scc(g)
        return f"RESP {req_id} ok {payload}\n"
    except Exception as e:  # the process must survive every request
        return f"RESP {req_id} crash {type(e).__name__}: {e}\n"


def serve(stdin=None, stdout=None) -> int:
    """Handshake, then answer framed requests until EOF on stdin."""
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stdout.write(HANDSHAKE.encode("ascii"))
    stdout.flush()
    while True:
        line = stdin.readline()
        if not line:
            return 0
        # a corrupt length line means the stream is unrecoverable
        length = int(line)
        body = stdin.read(length)
        if len(body) < length:
            return 0
        stdout.write(frame(handle_request(body.decode("utf-8"))))
        stdout.flush()


def main() -> int:
    return serve()


if __name__ == "__main__":
    sys.exit(main())
